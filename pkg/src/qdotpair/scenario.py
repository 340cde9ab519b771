"""Scenario configs, parameter sweeps, figure reproductions, and CSV output.

Config files are YAML with unit-suffixed keys; unknown keys are hard
errors so typos cannot silently fall back to defaults. Output is CSV with
'#'-prefixed metadata header lines, 9-significant-digit formatting and LF
line endings; two runs of the same scenario produce byte-identical files.

Physics errors at individual sweep points (unbound ground states,
singular geometry) are recorded with the sentinel string 'unbound' in the
affected value columns instead of aborting the sweep; quantities that are
mathematically undefined at a point (the level shift on exact resonance,
the transfer time at zero coupling) carry the sentinel 'undefined'.
"""

import hashlib
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np
import yaml

from ._version import __version__
from .constants import CONSTANT_VALUES
from .coupling import (
    PairGeometry,
    build_coupling_set,
    kp_atomic_dipole,
    transfer_time,
    vf_dipole,
)
from .dynamics import (
    TwoQubitHamiltonian,
    TwoQubitState,
    bell_via_biexciton,
    bell_via_forster,
    cnot12,
    concurrence,
    evolve_free,
    mixing_coefficient,
)
from .envelope import (
    BasisSpec,
    DotSpec,
    ParticleSpec,
    eh_overlap,
    exciton_dipole,
    exciton_energy,
    solve_particle,
)
from .errors import ConfigError, NothingToPlotError, PhysicsError, ResolutionError

KINDS = ("solve", "couplings", "dynamics", "figure")
PROTOCOLS = ("free", "bell_forster", "cnot", "bell_biexciton")
ERROR_SENTINEL = "unbound"
UNDEFINED_SENTINEL = "undefined"


@dataclass(frozen=True)
class SweepAxis:
    key: str
    start: float
    stop: float
    count: int
    scale: str = "linear"

    def values(self):
        if self.scale == "linear":
            return np.linspace(self.start, self.stop, self.count)
        return np.geomspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class DynamicsSpec:
    protocol: str
    hamiltonian: TwoQubitHamiltonian
    rabi_mev: Optional[float] = None
    sign: str = "+"
    rwa: bool = True
    initial: str = "10"
    duration_ps: Optional[float] = None


@dataclass(frozen=True)
class Scenario:
    kind: str
    dot1: Optional[DotSpec] = None
    dot2: Optional[DotSpec] = None
    geometry: Optional[PairGeometry] = None
    field_kv_per_cm: float = 0.0
    basis: BasisSpec = BasisSpec()
    atomic_dipole1_enm: tuple = (0.0, 0.0, 0.0)
    atomic_dipole2_enm: tuple = (0.0, 0.0, 0.0)
    dipole_model: str = "envelope"
    dynamics: Optional[DynamicsSpec] = None
    figure_name: Optional[str] = None
    figure_params: tuple = ()
    sweep: tuple = ()
    out: Optional[str] = None


@dataclass
class ResultTable:
    columns: list
    rows: list
    meta: dict

    def to_csv(self):
        lines = [f"# {key}={_format_value(value)}" for key, value in sorted(self.meta.items())]
        lines.append(",".join(self.columns))
        for row in self.rows:
            lines.append(",".join(_format_value(v) for v in row))
        return "\n".join(lines) + "\n"

    def write(self, path):
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_csv())

    def column(self, name):
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]


def _format_value(value):
    if value is None:
        return UNDEFINED_SENTINEL
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    x = float(value)
    if x == 0.0:
        x = 0.0  # fold -0.0
    return f"{x:.9g}"


# ---------------------------------------------------------------------------
# config parsing

def _require_mapping(node, where):
    if not isinstance(node, dict):
        raise ConfigError(f"{where} must be a mapping, got {type(node).__name__}")
    return node


def _check_keys(node, allowed, where):
    unknown = sorted(set(node) - set(allowed))
    if unknown:
        raise ConfigError(f"unknown key(s) {', '.join(repr(k) for k in unknown)} in {where}")


def _get_number(node, key, where, default=None, required=False):
    if key not in node:
        if required:
            raise ConfigError(f"missing required key '{key}' in {where}")
        return default
    value = node[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}.{key} must be a number, got {value!r}")
    return float(value)


def _parse_vector3(node, key, where, default=None, required=False):
    if key not in node:
        if required:
            raise ConfigError(f"missing required key '{key}' in {where}")
        return default
    value = node[key]
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise ConfigError(f"{where}.{key} must be a 3-component list")
    return tuple(float(v) for v in value)


def _parse_particle(node, where, default_mass):
    if node is None:
        return ParticleSpec(default_mass)
    _require_mapping(node, where)
    _check_keys(node, ("mass", "depth_mev"), where)
    mass = _get_number(node, "mass", where, default=default_mass)
    depth = _get_number(node, "depth_mev", where, default=500.0)
    return ParticleSpec(mass, depth)


def _parse_dot(node, where):
    _require_mapping(node, where)
    _check_keys(node, ("size_nm", "electron", "hole", "gap_mev"), where)
    if "size_nm" not in node:
        raise ConfigError(f"missing required key 'size_nm' in {where}")
    size = node["size_nm"]
    if isinstance(size, (int, float)) and not isinstance(size, bool):
        edges = (float(size),) * 3
    elif isinstance(size, (list, tuple)) and len(size) == 3:
        edges = tuple(float(v) for v in size)
    else:
        raise ConfigError(f"{where}.size_nm must be a number (cube) or a 3-component list")
    electron = _parse_particle(node.get("electron"), f"{where}.electron", 0.06)
    hole = _parse_particle(node.get("hole"), f"{where}.hole", 0.6)
    gap = _get_number(node, "gap_mev", where, default=0.0)
    return DotSpec(*edges, electron=electron, hole=hole, gap_mev=gap)


def _parse_geometry(node, where):
    _require_mapping(node, where)
    _check_keys(node, ("r_nm", "epsilon_r"), where)
    r = _parse_vector3(node, "r_nm", where, required=True)
    eps = _get_number(node, "epsilon_r", where, default=10.0)
    return PairGeometry(r, eps)


def _parse_basis(node, where):
    if node is None:
        return BasisSpec()
    _require_mapping(node, where)
    _check_keys(node, ("n_basis", "box_factor"), where)
    n = node.get("n_basis", 64)
    if isinstance(n, bool) or not isinstance(n, int):
        raise ConfigError(f"{where}.n_basis must be an integer")
    return BasisSpec(n, _get_number(node, "box_factor", where, default=3.0))


def _parse_dynamics(node, where):
    _require_mapping(node, where)
    allowed = ("protocol", "omega0_mev", "omega1_mev", "omega2_mev", "v_f_mev",
               "v_xx_mev", "rabi_mev", "sign", "rwa", "initial", "duration_ps")
    _check_keys(node, allowed, where)
    protocol = node.get("protocol")
    if protocol not in PROTOCOLS:
        raise ConfigError(f"{where}.protocol must be one of {PROTOCOLS}, got {protocol!r}")
    ham = TwoQubitHamiltonian(
        omega0_mev=_get_number(node, "omega0_mev", where, default=0.0),
        omega1_mev=_get_number(node, "omega1_mev", where, required=True),
        omega2_mev=_get_number(node, "omega2_mev", where, required=True),
        v_f_mev=_get_number(node, "v_f_mev", where, default=0.0),
        v_xx_mev=_get_number(node, "v_xx_mev", where, default=0.0),
    )
    rabi = _get_number(node, "rabi_mev", where, required=protocol in ("cnot", "bell_biexciton"))
    duration = _get_number(node, "duration_ps", where, required=protocol == "free")
    sign = node.get("sign", "+")
    if sign not in ("+", "-"):
        raise ConfigError(f"{where}.sign must be '+' or '-'")
    rwa = node.get("rwa", True)
    if not isinstance(rwa, bool):
        raise ConfigError(f"{where}.rwa must be a boolean")
    initial = str(node.get("initial", "10"))
    if initial not in ("00", "01", "10", "11"):
        raise ConfigError(f"{where}.initial must be a two-qubit basis label")
    return DynamicsSpec(protocol, ham, rabi, sign, rwa, initial, duration)


def _parse_sweep(node, where):
    if node is None:
        return ()
    if not isinstance(node, list):
        raise ConfigError(f"{where} must be a list of axes")
    axes = []
    for i, axis in enumerate(node):
        tag = f"{where}[{i}]"
        _require_mapping(axis, tag)
        _check_keys(axis, ("key", "start", "stop", "count", "scale"), tag)
        key = axis.get("key")
        if not isinstance(key, str):
            raise ConfigError(f"{tag}.key must be a string")
        start = _get_number(axis, "start", tag, required=True)
        stop = _get_number(axis, "stop", tag, required=True)
        count = axis.get("count")
        if isinstance(count, bool) or not isinstance(count, int) or count < 2:
            raise ConfigError(f"{tag}.count must be an integer >= 2")
        if start == stop:
            raise ConfigError(f"{tag}: start and stop must differ")
        scale = axis.get("scale", "linear")
        if scale not in ("linear", "log"):
            raise ConfigError(f"{tag}.scale must be 'linear' or 'log'")
        if scale == "log" and (start <= 0 or stop <= 0):
            raise ConfigError(f"{tag}: log scale needs positive start and stop")
        axes.append(SweepAxis(key, start, stop, count, scale))
    return tuple(axes)


_TOP_KEYS = {
    "solve": ("kind", "dot", "field_kv_per_cm", "basis", "sweep", "out"),
    "couplings": ("kind", "dot1", "dot2", "geometry", "field_kv_per_cm", "basis",
                  "atomic_dipole1_enm", "atomic_dipole2_enm", "dipole_model",
                  "sweep", "out"),
    "dynamics": ("kind", "dynamics", "sweep", "out"),
    "figure": ("kind", "figure", "out"),
}


def parse_scenario(text, default_kind=None):
    """Parse and validate a YAML scenario document into a Scenario."""
    try:
        raw = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        line = exc.problem_mark.line + 1 if exc.problem_mark else None
        raise ConfigError(f"YAML syntax error: {exc.problem}", line=line) from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"YAML error: {exc}") from exc
    if raw is None:
        raw = {}
    _require_mapping(raw, "scenario")
    return _scenario_from_dict(raw, default_kind)


def _scenario_from_dict(raw, default_kind=None):
    kind = raw.get("kind", default_kind)
    if kind not in KINDS:
        raise ConfigError(f"kind must be one of {KINDS}, got {kind!r}")
    _check_keys(raw, _TOP_KEYS[kind], "scenario")

    out = raw.get("out")
    if out is not None and not isinstance(out, str):
        raise ConfigError("out must be a path string")
    sweep = _parse_sweep(raw.get("sweep"), "sweep")
    field = _get_number(raw, "field_kv_per_cm", "scenario", default=0.0)
    basis = _parse_basis(raw.get("basis"), "basis")

    if kind == "solve":
        if "dot" not in raw:
            raise ConfigError("missing required key 'dot' in scenario")
        scenario = Scenario(kind=kind, dot1=_parse_dot(raw["dot"], "dot"),
                            field_kv_per_cm=field, basis=basis, sweep=sweep, out=out)
    elif kind == "couplings":
        for key in ("dot1", "dot2", "geometry"):
            if key not in raw:
                raise ConfigError(f"missing required key '{key}' in scenario")
        model = raw.get("dipole_model", "envelope")
        if model not in ("envelope", "large_field_limit"):
            raise ConfigError("dipole_model must be 'envelope' or 'large_field_limit'")
        scenario = Scenario(
            kind=kind,
            dot1=_parse_dot(raw["dot1"], "dot1"),
            dot2=_parse_dot(raw["dot2"], "dot2"),
            geometry=_parse_geometry(raw["geometry"], "geometry"),
            field_kv_per_cm=field,
            basis=basis,
            atomic_dipole1_enm=_parse_vector3(raw, "atomic_dipole1_enm", "scenario",
                                              default=(0.0, 0.0, 0.0)),
            atomic_dipole2_enm=_parse_vector3(raw, "atomic_dipole2_enm", "scenario",
                                              default=(0.0, 0.0, 0.0)),
            dipole_model=model,
            sweep=sweep,
            out=out,
        )
    elif kind == "dynamics":
        if "dynamics" not in raw:
            raise ConfigError("missing required key 'dynamics' in scenario")
        scenario = Scenario(kind=kind, dynamics=_parse_dynamics(raw["dynamics"], "dynamics"),
                            sweep=sweep, out=out)
    else:
        fig = raw.get("figure")
        _require_mapping(fig if fig is not None else {}, "figure")
        if fig is None or "name" not in fig:
            raise ConfigError("missing required key 'figure.name' in scenario")
        _check_keys(fig, ("name", "params"), "figure")
        name = fig["name"]
        if name not in FIGURES:
            raise ConfigError(
                f"unknown figure {name!r}; valid names: {', '.join(sorted(FIGURES))}"
            )
        params = fig.get("params") or {}
        _require_mapping(params, "figure.params")
        allowed = set(FIGURE_DEFAULTS[name])
        _check_keys(params, allowed, "figure.params")
        scenario = Scenario(kind=kind, figure_name=name,
                            figure_params=tuple(sorted(params.items())), out=out)

    # reject sweep keys that do not resolve in this scenario
    base = scenario_to_dict(scenario)
    for axis in scenario.sweep:
        _resolve_path(base, axis.key)
    return scenario


def scenario_to_dict(s):
    """Canonical plain-dict form of a Scenario (inverse of parsing)."""
    def dot_dict(dot):
        return {
            "size_nm": [dot.lx_nm, dot.ly_nm, dot.lz_nm],
            "electron": {"mass": dot.electron.mass, "depth_mev": dot.electron.depth_mev},
            "hole": {"mass": dot.hole.mass, "depth_mev": dot.hole.depth_mev},
            "gap_mev": dot.gap_mev,
        }

    raw = {"kind": s.kind}
    if s.kind == "solve":
        raw["dot"] = dot_dict(s.dot1)
        raw["field_kv_per_cm"] = s.field_kv_per_cm
        raw["basis"] = {"n_basis": s.basis.n_basis, "box_factor": s.basis.box_factor}
    elif s.kind == "couplings":
        raw["dot1"] = dot_dict(s.dot1)
        raw["dot2"] = dot_dict(s.dot2)
        raw["geometry"] = {"r_nm": list(s.geometry.r_nm), "epsilon_r": s.geometry.epsilon_r}
        raw["field_kv_per_cm"] = s.field_kv_per_cm
        raw["basis"] = {"n_basis": s.basis.n_basis, "box_factor": s.basis.box_factor}
        raw["atomic_dipole1_enm"] = list(s.atomic_dipole1_enm)
        raw["atomic_dipole2_enm"] = list(s.atomic_dipole2_enm)
        raw["dipole_model"] = s.dipole_model
    elif s.kind == "dynamics":
        d = s.dynamics
        raw["dynamics"] = {
            "protocol": d.protocol,
            "omega0_mev": d.hamiltonian.omega0_mev,
            "omega1_mev": d.hamiltonian.omega1_mev,
            "omega2_mev": d.hamiltonian.omega2_mev,
            "v_f_mev": d.hamiltonian.v_f_mev,
            "v_xx_mev": d.hamiltonian.v_xx_mev,
            "sign": d.sign,
            "rwa": d.rwa,
            "initial": d.initial,
        }
        if d.rabi_mev is not None:
            raw["dynamics"]["rabi_mev"] = d.rabi_mev
        if d.duration_ps is not None:
            raw["dynamics"]["duration_ps"] = d.duration_ps
    else:
        raw["figure"] = {"name": s.figure_name, "params": dict(s.figure_params)}
    if s.sweep:
        raw["sweep"] = [
            {"key": a.key, "start": a.start, "stop": a.stop, "count": a.count, "scale": a.scale}
            for a in s.sweep
        ]
    if s.out is not None:
        raw["out"] = s.out
    return raw


def serialize_scenario(s):
    """Deterministic YAML text such that parse_scenario(serialize(s)) == s."""
    return yaml.safe_dump(scenario_to_dict(s), sort_keys=True, default_flow_style=False)


def scenario_digest(s):
    return hashlib.sha256(serialize_scenario(s).encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# sweep machinery

def _resolve_path(node, path):
    parts = path.split(".")
    for part in parts:
        if isinstance(node, dict):
            if part not in node:
                raise ConfigError(f"sweep key '{path}' does not resolve: missing '{part}'")
            node = node[part]
        elif isinstance(node, list):
            try:
                node = node[int(part)]
            except (ValueError, IndexError):
                raise ConfigError(f"sweep key '{path}': bad list index '{part}'") from None
        else:
            raise ConfigError(f"sweep key '{path}' does not resolve at '{part}'")
    if isinstance(node, bool) or not isinstance(node, (int, float)):
        raise ConfigError(f"sweep key '{path}' must point at a number, found {node!r}")
    return node


def _set_path(node, path, value):
    parts = path.split(".")
    for part in parts[:-1]:
        node = node[part] if isinstance(node, dict) else node[int(part)]
    last = parts[-1]
    if isinstance(node, dict):
        node[last] = value
    else:
        node[int(last)] = value


def _base_meta(s):
    meta = {"qdotpair_version": __version__, "scenario_sha256": scenario_digest(s),
            "kind": s.kind}
    meta.update(CONSTANT_VALUES)
    return meta


def run_scenario(s, threads=1):
    """Execute a scenario (possibly a sweep grid) into a ResultTable.

    Grid points are independent and may run concurrently; rows are emitted
    in deterministic grid order regardless of completion order.
    """
    if s.kind == "figure":
        return figure(s.figure_name, dict(s.figure_params))
    compute = {"solve": _solve_row, "couplings": _couplings_row, "dynamics": _dynamics_row}[s.kind]
    axis_cols = [axis.key.replace(".", "_") for axis in s.sweep]
    base = scenario_to_dict(s)
    grids = [axis.values() for axis in s.sweep]
    points = list(itertools.product(*grids)) if s.sweep else [()]

    def one_point(values):
        raw = yaml.safe_load(yaml.safe_dump(base))  # deep copy
        for axis, value in zip(s.sweep, values):
            _set_path(raw, axis.key, float(value))
        point = _scenario_from_dict(raw)
        try:
            cells = compute(point)
        except (PhysicsError, ResolutionError):
            if not s.sweep:
                raise  # a single-point physics failure is the caller's problem
            cells = None
        return values, cells

    if threads > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one_point, points))
    else:
        results = [one_point(p) for p in points]

    value_cols = _VALUE_COLUMNS[s.kind] if s.kind != "dynamics" \
        else _dynamics_columns(s.dynamics.protocol)
    rows = []
    for values, cells in results:
        row = [float(v) for v in values]
        if cells is None:
            row.extend([ERROR_SENTINEL] * len(value_cols))
        else:
            row.extend(cells[c] for c in value_cols)
        rows.append(row)
    meta = _base_meta(s)
    meta["error_sentinel"] = ERROR_SENTINEL
    return ResultTable(axis_cols + list(value_cols), rows, meta)


_VALUE_COLUMNS = {
    "solve": (
        "e_x_mev", "e_y_mev", "e_z_mev", "h_x_mev", "h_y_mev", "h_z_mev",
        "e_total_mev", "h_total_mev", "x_e_nm", "x_h_nm", "px_enm", "p_enm",
        "overlap_dimless", "omega_mev",
    ),
    "couplings": (
        "omega1_mev", "omega2_mev", "delta0_mev", "v_xx_mev", "v_f_mev",
        "v_f_abs_mev", "delta_shift_mev", "c_mix_dimless",
        "transfer_paper_ps", "transfer_half_osc_ps",
    ),
}


def _solve_row(s):
    e_state = solve_particle(s.dot1, "electron", s.field_kv_per_cm, s.basis)
    h_state = solve_particle(s.dot1, "hole", s.field_kv_per_cm, s.basis)
    dipole = np.array(e_state.position_nm) - np.array(h_state.position_nm)
    return {
        "e_x_mev": e_state.axis_energies_mev[0],
        "e_y_mev": e_state.axis_energies_mev[1],
        "e_z_mev": e_state.axis_energies_mev[2],
        "h_x_mev": h_state.axis_energies_mev[0],
        "h_y_mev": h_state.axis_energies_mev[1],
        "h_z_mev": h_state.axis_energies_mev[2],
        "e_total_mev": e_state.total_energy_mev,
        "h_total_mev": h_state.total_energy_mev,
        "x_e_nm": e_state.position_nm[0],
        "x_h_nm": h_state.position_nm[0],
        "px_enm": float(dipole[0]),
        "p_enm": float(np.linalg.norm(dipole)),
        "overlap_dimless": eh_overlap(s.dot1, s.field_kv_per_cm, s.basis),
        "omega_mev": exciton_energy(s.dot1, s.field_kv_per_cm, s.basis),
    }


def _couplings_row(s):
    cset = build_coupling_set(
        s.dot1, s.dot2, s.geometry, s.field_kv_per_cm,
        np.array(s.atomic_dipole1_enm), np.array(s.atomic_dipole2_enm),
        s.basis, s.dipole_model,
    )
    if cset.v_f_mev != 0.0:
        times = transfer_time(cset.v_f_mev)
        t_paper, t_half = times.paper_ps, times.half_oscillation_ps
    else:
        t_paper = t_half = None
    return {
        "omega1_mev": cset.omega1_mev,
        "omega2_mev": cset.omega2_mev,
        "delta0_mev": cset.delta0_mev,
        "v_xx_mev": cset.v_xx_mev,
        "v_f_mev": cset.v_f_mev,
        "v_f_abs_mev": abs(cset.v_f_mev),
        "delta_shift_mev": cset.delta_shift_mev,
        "c_mix_dimless": cset.c_mix,
        "transfer_paper_ps": t_paper,
        "transfer_half_osc_ps": t_half,
    }


def _dynamics_columns(protocol):
    return {
        "free": ("p00", "p01", "p10", "p11", "concurrence_dimless"),
        "bell_forster": ("t_star_ps", "concurrence_dimless", "p01", "p10"),
        "cnot": ("carrier_mev", "duration_ps", "fidelity_dimless"),
        "bell_biexciton": ("concurrence_dimless", "fidelity_dimless",
                           "duration1_ps", "duration2_ps"),
    }[protocol]


def _dynamics_row(s):
    d = s.dynamics
    ham = d.hamiltonian
    if d.protocol == "free":
        state = evolve_free(TwoQubitState.basis(d.initial), ham, d.duration_ps)
        pops = state.populations()
        return {"p00": pops["00"], "p01": pops["01"], "p10": pops["10"],
                "p11": pops["11"], "concurrence_dimless": concurrence(state)}
    if d.protocol == "bell_forster":
        state, t_star = bell_via_forster(ham)
        return {"t_star_ps": t_star, "concurrence_dimless": concurrence(state),
                "p01": state.population("01"), "p10": state.population("10")}
    if d.protocol == "cnot":
        pulse, fidelity = cnot12(ham, d.rabi_mev)
        return {"carrier_mev": pulse.carrier_mev, "duration_ps": pulse.duration_ps,
                "fidelity_dimless": fidelity}
    state, pulses = bell_via_biexciton(ham, d.rabi_mev, d.sign)
    target = np.zeros(4, dtype=complex)
    target[0] = 1.0 / math.sqrt(2.0)
    target[3] = (1.0 if d.sign == "+" else -1.0) / math.sqrt(2.0)
    return {"concurrence_dimless": concurrence(state),
            "fidelity_dimless": state.fidelity_to(target),
            "duration1_ps": pulses[0].duration_ps,
            "duration2_ps": pulses[1].duration_ps}


# ---------------------------------------------------------------------------
# canonical figure sweeps

FIGURE_DEFAULTS = {
    # eigenstate coefficients vs V_F/Delta0; upper end chosen so both
    # coefficients sit within 1e-3 of the 1/sqrt(2) asymptote at the edge
    "fig1c": {"ratio_start": 0.01, "ratio_stop": 1000.0, "count": 61},
    "fig2b": {"sizes_nm": [4.0, 6.0, 8.0, 10.0], "field_start": 0.0,
              "field_stop": 150.0, "field_count": 16},
    "fig2c": {"sizes_nm": [4.0, 6.0, 8.0, 10.0], "field_start": 0.0,
              "field_stop": 150.0, "field_count": 16, "epsilon_r": 10.0},
    "fig3a": {"r_start": 1.0, "r_stop": 10.0, "count": 46, "epsilon_r": 10.0},
    "fig3b": {"size_start": 1.0, "size_stop": 10.0, "size_count": 19,
              "depths_mev": [100.0, 200.0, 500.0, 1000.0]},
    "fig4a": {"base_nm": 5.0, "ratio_stop": 2.0, "count": 21, "depth_mev": 500.0},
    "fig4b": {"base_nm": 5.0, "ratio_stop": 2.0, "count": 21, "depth_mev": 500.0,
              "r_nm": 5.0, "x_nm": 0.5, "epsilon_r": 10.0},
}


def figure(name, overrides=None):
    """Run the canonical sweep behind one published curve and return its table."""
    if name not in FIGURES:
        raise ConfigError(f"unknown figure {name!r}; valid names: {', '.join(sorted(FIGURES))}")
    params = dict(FIGURE_DEFAULTS[name])
    for key, value in (overrides or {}).items():
        if key not in params:
            raise ConfigError(f"unknown override {key!r} for {name}")
        params[key] = value
    scenario = Scenario(kind="figure", figure_name=name,
                        figure_params=tuple(sorted(params.items())))
    columns, rows, notes = FIGURES[name](params)
    meta = _base_meta(scenario)
    meta["figure"] = name
    meta.update(notes)
    return ResultTable(columns, rows, meta)


def _fig_dots(shape, a_nm, depth_mev=500.0):
    """Geometry mapping used by the fig2 sweeps: cube (a,a,a); flat (a,a,a/5)."""
    electron = ParticleSpec(0.06, depth_mev)
    hole = ParticleSpec(0.6, depth_mev)
    if shape == "cube":
        return DotSpec.cube(a_nm, electron, hole)
    return DotSpec.flat(a_nm, a_nm, a_nm / 5.0, electron, hole)


def _fig1c(params):
    ratios = np.geomspace(params["ratio_start"], params["ratio_stop"], params["count"])
    rows = []
    for r in ratios:
        inv_a = 1.0 / math.hypot(1.0, 2.0 * r)
        c1 = math.sqrt((1.0 + inv_a) / 2.0)
        c2 = math.sqrt((1.0 - inv_a) / 2.0)
        rows.append([float(r), c1, c2])
    return (["vf_over_delta0_dimless", "c1_dimless", "c2_dimless"], rows, {})


def _fig2b(params):
    fields = np.linspace(params["field_start"], params["field_stop"], params["field_count"])
    rows = []
    for shape in ("cube", "flat"):
        for a in params["sizes_nm"]:
            for field in fields:
                row = [shape, float(a), float(field)]
                try:
                    p = exciton_dipole(_fig_dots(shape, a), float(field))
                    row += [float(p[0]), float(np.linalg.norm(p))]
                except PhysicsError:
                    row += [ERROR_SENTINEL, ERROR_SENTINEL]
                rows.append(row)
    notes = {"mapping": "cube=(a,a,a) flat=(a,a,a/5), field along x",
             "masses": "m_e=0.06 m_h=0.6 depth=500meV"}
    return (["shape", "a_nm", "field_kv_per_cm", "px_enm", "p_enm"], rows, notes)


def _fig2c(params):
    from .constants import K_E2_MEV_NM
    fields = np.linspace(params["field_start"], params["field_stop"], params["field_count"])
    eps = params["epsilon_r"]
    rows = []
    for shape in ("cube", "flat"):
        for a in params["sizes_nm"]:
            for field in fields:
                row = [shape, float(a), float(field)]
                try:
                    p = exciton_dipole(_fig_dots(shape, a), float(field))
                    # identical dots, dipoles parallel and perpendicular to R
                    row.append(K_E2_MEV_NM / eps * float(p[0]) ** 2)
                except PhysicsError:
                    row.append(ERROR_SENTINEL)
                rows.append(row)
    notes = {"mapping": "a=b, dipoles perpendicular to R; value is V_XX*R^3",
             "orientation": "perpendicular"}
    return (["shape", "a_nm", "field_kv_per_cm", "vxx_r3_mev_nm3"], rows, notes)


def _fig3a(params):
    from .constants import K_E2_MEV_NM
    rs = np.linspace(params["r_start"], params["r_stop"], params["count"])
    dipole_per_x = 32.0 / (9.0 * math.pi**2)
    rows = []
    for r in rs:
        # collinear point dipoles, unit overlaps: |V_F|/x^2
        value = 2.0 * K_E2_MEV_NM / (params["epsilon_r"] * float(r) ** 3) * dipole_per_x**2
        rows.append([float(r), value])
    notes = {"orientation": "collinear", "overlaps": "O_i=1",
             "atomic_dipole": "32x/9pi^2 per unit x"}
    return (["r_nm", "vf_over_x2_mev_per_nm2"], rows, notes)


def _fig3b(params):
    sizes = np.linspace(params["size_start"], params["size_stop"], params["size_count"])
    rows = []
    for depth in params["depths_mev"]:
        for a in sizes:
            dot = DotSpec.cube(float(a), ParticleSpec(0.06, float(depth)),
                               ParticleSpec(0.6, float(depth)))
            row = [float(a), float(depth)]
            try:
                row.append(eh_overlap(dot))
            except PhysicsError:
                row.append(ERROR_SENTINEL)
            rows.append(row)
    notes = {"mapping": "cubes, zero field; sentinel rows mark the unbound cut-off"}
    return (["a_nm", "depth_mev", "overlap_dimless"], rows, notes)


def _delta0_of_ratio(base_nm, ratio, depth_mev):
    electron = ParticleSpec(0.06, depth_mev)
    hole = ParticleSpec(0.6, depth_mev)
    dot1 = DotSpec.cube(base_nm, electron, hole)
    dot2 = DotSpec.cube(base_nm * ratio, electron, hole)
    return exciton_energy(dot1) - exciton_energy(dot2)


def _fig4a(params):
    ratios = np.linspace(1.0, params["ratio_stop"], params["count"])
    rows = [[float(r), _delta0_of_ratio(params["base_nm"], float(r), params["depth_mev"])]
            for r in ratios]
    notes = {"mapping": "dot I = cube(base), dot II = cube(base*ratio); zero field"}
    return (["size_ratio_dimless", "delta0_mev"], rows, notes)


def _fig4b(params):
    ratios = np.linspace(1.0, params["ratio_stop"], params["count"])
    electron = ParticleSpec(0.06, params["depth_mev"])
    hole = ParticleSpec(0.6, params["depth_mev"])
    x = params["x_nm"]
    r = params["r_nm"]
    geom = PairGeometry((r, 0.0, 0.0), params["epsilon_r"])
    dip = np.array([kp_atomic_dipole(x), 0.0, 0.0])
    rows = []
    for ratio in ratios:
        dot1 = DotSpec.cube(params["base_nm"], electron, hole)
        dot2 = DotSpec.cube(params["base_nm"] * float(ratio), electron, hole)
        d0 = exciton_energy(dot1) - exciton_energy(dot2)
        v_f = vf_dipole(dip, dip, eh_overlap(dot1), eh_overlap(dot2), geom)
        c_mix = mixing_coefficient(v_f, d0)
        rows.append([float(ratio), d0, c_mix, c_mix * r**3 / x**2])
    notes = {"mapping": "dot I = cube(base), dot II = cube(base*ratio)",
             "orientation": "collinear", "reference": f"R={r}nm x={x}nm"}
    return (["size_ratio_dimless", "delta0_mev", "c_mix_dimless", "c_mix_r3_over_x2_nm"],
            rows, notes)


FIGURES = {
    "fig1c": _fig1c,
    "fig2b": _fig2b,
    "fig2c": _fig2c,
    "fig3a": _fig3a,
    "fig3b": _fig3b,
    "fig4a": _fig4a,
    "fig4b": _fig4b,
}


# ---------------------------------------------------------------------------
# plot script emission

def emit_plot_script(table, style="line", csv_path="table.csv"):
    """Standalone matplotlib script plotting the CSV; never needed for numbers."""
    if style not in ("line", "heatmap"):
        raise ConfigError(f"style must be 'line' or 'heatmap', got {style!r}")
    if not table.rows:
        raise NothingToPlotError("result table has no rows")
    numeric = [c for c in table.columns
               if not isinstance(table.rows[0][table.columns.index(c)], str)]
    if style == "line":
        x = numeric[0]
        ys = numeric[1:]
        log_x = "fig1c" in table.meta.get("figure", "")
        body = [
            f'df = pd.read_csv("{csv_path}", comment="#")',
            f'df = df.apply(pd.to_numeric, errors="coerce")',
            "fig, ax = plt.subplots()",
        ]
        for y in ys:
            body.append(f'ax.plot(df["{x}"], df["{y}"], label="{y}")')
        if log_x:
            body.append('ax.set_xscale("log")')
        body += [f'ax.set_xlabel("{x}")', "ax.legend()",
                 f'fig.savefig("{csv_path}.png", dpi=150)']
    else:
        if len(numeric) < 3:
            raise NothingToPlotError("heatmap needs two axis columns and one value column")
        x, y, z = numeric[0], numeric[1], numeric[2]
        body = [
            f'df = pd.read_csv("{csv_path}", comment="#")',
            f'df = df.apply(pd.to_numeric, errors="coerce")',
            f'grid = df.pivot_table(index="{y}", columns="{x}", values="{z}")',
            "fig, ax = plt.subplots()",
            "im = ax.pcolormesh(grid.columns, grid.index, grid.values)",
            f'ax.set_xlabel("{x}")',
            f'ax.set_ylabel("{y}")',
            f'fig.colorbar(im, ax=ax, label="{z}")',
            f'fig.savefig("{csv_path}.png", dpi=150)',
        ]
    lines = ["#!/usr/bin/env python3",
             '"""Auto-generated plot script."""',
             "import matplotlib",
             'matplotlib.use("Agg")',
             "import matplotlib.pyplot as plt",
             "import pandas as pd",
             ""] + body + [""]
    return "\n".join(lines)
