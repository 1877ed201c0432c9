"""Descriptor handling and the compute pipeline behind the CLI.

A descriptor is a small JSON object naming a variety::

    {"kind": "segre", "params": [2, 3]}
    {"kind": "section", "of": {"kind": "pluecker", "params": [2, 5]}, "seed": 7, "codim": 2}
    {"kind": "projection", "of": {"kind": "segre", "params": [4, 4]}, "center": "rank3"}
    {"kind": "cone_over", "of": {"kind": "segre", "params": [2, 2]}, "params": [1]}
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from autcone import geometry, varieties
from autcone.ideal import GradedPiece, degree_piece_from_generators, forms_vanishing, is_nondegenerate
from autcone.lie import aut_cone, prolongation, tangency_check
from autcone.varieties import Parametrization

log = logging.getLogger(__name__)

DEFAULT_SEED = 7


class DescriptorError(ValueError):
    pass


@dataclass(frozen=True)
class VarietyDescriptor:
    kind: str
    params: tuple[int, ...] = ()
    seed: int | None = None
    of: "VarietyDescriptor | None" = None
    codim: int = 1
    center: object = None

    @classmethod
    def from_obj(cls, obj) -> "VarietyDescriptor":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise DescriptorError("descriptor must be an object with a 'kind'")
        kind = obj["kind"]
        if kind not in varieties.KINDS:
            raise DescriptorError(f"unknown kind {kind!r}")
        try:
            params = tuple(int(x) for x in obj.get("params", ()))
        except (TypeError, ValueError):
            raise DescriptorError("params must be integers") from None
        of = cls.from_obj(obj["of"]) if "of" in obj else None
        if kind in ("cone_over", "section", "projection") and of is None:
            raise DescriptorError(f"{kind} needs an 'of' descriptor")
        center = obj.get("center")
        if isinstance(center, list):
            center = tuple(tuple(str(Fraction(x)) for x in v) for v in center)
        seed = obj.get("seed")
        return cls(kind, params, None if seed is None else int(seed), of, int(obj.get("codim", 1)), center)

    @classmethod
    def parse(cls, text: str) -> "VarietyDescriptor":
        try:
            return cls.from_obj(json.loads(text))
        except json.JSONDecodeError as exc:
            raise DescriptorError(f"invalid JSON: {exc}") from None

    def to_obj(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.params:
            out["params"] = list(self.params)
        if self.of is not None:
            out["of"] = self.of.to_obj()
        if self.kind == "section":
            out["codim"] = self.codim
            if self.seed is not None:
                out["seed"] = self.seed
        if self.center is not None:
            out["center"] = self.center if isinstance(self.center, str) else [list(v) for v in self.center]
        return out

    def with_seed(self, seed: int) -> "VarietyDescriptor":
        return VarietyDescriptor(self.kind, self.params, seed, self.of, self.codim, self.center)


@dataclass
class Model:
    label: str
    ambient_dim: int
    parametrization: Parametrization | None
    pieces: list[GradedPiece]
    meta: dict = field(default_factory=dict)
    anomalies: list[str] = field(default_factory=list)
    # vertex detection on restricted pieces only gives a necessary condition
    exact_ideal: bool = True


_ARITY = {"segre": 2, "veronese": 2, "pluecker": 2, "quadric": 1, "sympl": 2, "spinor10": 0, "cone_over": 1}


def _base(desc: VarietyDescriptor):
    want = _ARITY.get(desc.kind)
    if want is not None and len(desc.params) != want:
        raise DescriptorError(f"{desc.kind} takes {want} integer parameter(s), got {len(desc.params)}")
    try:
        if desc.kind == "segre":
            return varieties.segre(*desc.params)
        if desc.kind == "veronese":
            return varieties.veronese(*desc.params)
        if desc.kind == "pluecker":
            return varieties.pluecker(*desc.params)
        if desc.kind == "sympl":
            return varieties.sympl_vmrt(*desc.params)
        if desc.kind == "spinor10":
            return varieties.spinor10()
        if desc.kind == "quadric":
            return varieties.quadric(*desc.params)
    except ValueError as exc:
        raise DescriptorError(str(exc)) from None
    raise DescriptorError(f"{desc.kind} is not a base variety")


def _resolve_center(desc: VarietyDescriptor) -> list[tuple[Fraction, ...]]:
    of = desc.of
    c = desc.center
    if c is None:
        raise DescriptorError("projection needs a center")
    if isinstance(c, str):
        if not c.startswith("rank"):
            raise DescriptorError(f"unknown center preset {c!r}")
        r = int(c[4:])
        try:
            if of.kind == "segre":
                return [geometry.segre_center(*of.params, r)]
            if of.kind == "pluecker" and of.params[0] == 2:
                return [geometry.pluecker_center(of.params[1], r)]
        except ValueError as exc:
            raise DescriptorError(str(exc)) from None
        raise DescriptorError(f"no rank preset for {of.kind}")
    return [tuple(Fraction(x) for x in v) for v in c]


def build_model(desc: VarietyDescriptor, degrees=(2,)) -> Model:
    """Construct the variety and its graded pieces in the requested degrees."""
    if desc.kind == "section":
        inner = build_model(desc.of, (2,))
        if desc.seed is None:
            raise DescriptorError("section needs a seed")
        sec = geometry.hyperplane_section(inner.pieces, seed=desc.seed, codim=desc.codim)
        pieces = sec.pieces
        pieces += [
            degree_piece_from_generators(pieces[0].forms(), d) for d in degrees if d > 2 and pieces[0].dim
        ]
        m = Model(
            f"section({inner.label},codim={desc.codim})",
            pieces[0].ambient_dim,
            None,
            pieces,
            {"seed": desc.seed, "forms": [list(f) for f in sec.forms]},
            exact_ideal=False,
        )
        if pieces[0].dim != inner.pieces[0].dim:
            m.anomalies.append("restricted quadric space lost dimension (non-general section)")
        if geometry.cone_vertex_space(pieces[:1]):
            m.anomalies.append("section is a cone (non-general section)")
        return m
    if desc.kind == "projection":
        inner_p = _base(desc.of) if desc.of.kind not in ("cone_over", "projection") else build_model(desc.of).parametrization
        if not isinstance(inner_p, Parametrization):
            raise DescriptorError("projection needs a parametrized variety")
        center = _resolve_center(desc)
        try:
            p = geometry.project(inner_p, center)
        except ValueError as exc:
            raise DescriptorError(str(exc)) from None
        m = _from_parametrization(p, degrees)
        if not geometry.center_rank_ok(desc.of.kind, desc.of.params, center):
            m.anomalies.append("center rank below the biregularity threshold (secant point)")
        return m
    if desc.kind == "cone_over":
        inner = build_model(desc.of, degrees)
        if inner.parametrization is None:
            raise DescriptorError("cone_over needs a parametrized variety")
        try:
            p = varieties.cone_over(inner.parametrization, *desc.params)
        except (ValueError, TypeError) as exc:
            raise DescriptorError(str(exc)) from None
        return _from_parametrization(p, degrees)
    base = _base(desc)
    if isinstance(base, GradedPiece):
        pieces = [base] + [degree_piece_from_generators(base.forms(), d) for d in degrees if d > 2]
        return Model(f"quadric({desc.params[0]})", base.ambient_dim, None, pieces)
    return _from_parametrization(base, degrees)


def _from_parametrization(p: Parametrization, degrees) -> Model:
    pieces = [forms_vanishing(p, d) for d in degrees]
    m = Model(p.label, p.ambient_dim, p, pieces)
    if not is_nondegenerate(p):
        m.anomalies.append("degenerate: a linear form vanishes on the image")
    if not any(piece.dim for piece in pieces):
        degs = ", ".join(str(d) for d in degrees)
        m.anomalies.append(f"no forms of degree {degs} vanish on the image (dimension anomaly; try a higher --degree)")
    return m


def compute(model: Model, tangency_points: int = 20, check_seed: int = 0, max_order: int = 2) -> dict:
    """Run aut -> prolongations -> vertex space and collect the checks."""
    report: dict = {
        "variety": model.label,
        "ambient_dim": model.ambient_dim,
        "ideal_dims": {str(p.degree): p.dim for p in model.pieces},
        "dim_aut": None,
        "projective_dim_aut": None,
        "dim_prolong_1": None,
        "dim_prolong_2": None,
        "dim_vertex": None,
        "checks": {"bracket_closed": None, "identity_in": None, "tangency_ok": None, "vertex_exact": model.exact_ideal},
        "anomalies": list(model.anomalies),
    }
    report.update({k: v for k, v in model.meta.items()})
    if not any(p.dim for p in model.pieces):
        return report
    g = aut_cone(model.pieces, model.label)
    report["dim_aut"] = g.dim
    ident = g.contains_identity()
    report["checks"]["identity_in"] = ident
    report["projective_dim_aut"] = g.dim - 1 if ident else None
    report["checks"]["bracket_closed"] = g.is_bracket_closed()
    if model.parametrization is not None:
        report["checks"]["tangency_ok"] = tangency_check(g, model.parametrization, tangency_points, check_seed)
    if max_order >= 1:
        report["dim_prolong_1"] = prolongation(g, 1).dim
    if max_order >= 2:
        report["dim_prolong_2"] = prolongation(g, 2).dim
    report["dim_vertex"] = len(geometry.cone_vertex_space(model.pieces))
    return report


def checks_failed(report: dict) -> list[str]:
    bad = [k for k in ("bracket_closed", "identity_in", "tangency_ok") if report["checks"][k] is False]
    return bad + report["anomalies"]


def compute_with_retries(desc: VarietyDescriptor, degrees=(2,), max_retries: int = 5, expect=None, **kw) -> dict:
    """Seeded sections are re-drawn (seed, seed+1, ...) while they look non-general.

    A draw is rejected when the restricted quadric space loses dimension, the
    section is a cone, or ``expect = (dim_aut, dim_prolong_1)`` is given and
    not met.
    """
    if desc.kind != "section":
        report = compute(build_model(desc, degrees), **kw)
        report["descriptor"] = desc.to_obj()
        return report
    seed = desc.seed if desc.seed is not None else DEFAULT_SEED
    attempts = []
    report = None
    for attempt in range(max_retries):
        d = desc.with_seed(seed + attempt)
        model = build_model(d, degrees)
        report = compute(model, **kw)
        reasons = list(report["anomalies"])
        if expect is not None and (report["dim_aut"], report["dim_prolong_1"]) != tuple(expect):
            reasons.append(f"dims ({report['dim_aut']}, {report['dim_prolong_1']}) differ from expected {tuple(expect)}")
        attempts.append({"seed": d.seed, "ok": not reasons, "reasons": reasons})
        log.info("section attempt seed=%d ok=%s", d.seed, not reasons)
        if not reasons:
            report["descriptor"] = d.to_obj()
            break
    else:
        report["descriptor"] = desc.with_seed(seed + max_retries - 1).to_obj()
        report["anomalies"].append(f"no general section found after {max_retries} seeds")
    report["attempts"] = attempts
    return report


def report_schema() -> dict:
    return json.loads(resources.files("autcone").joinpath("report.schema.json").read_text())


def render_text(report: dict) -> str:
    """Aligned text view of a report (derived from the JSON form)."""
    lines = []
    flat = []
    for key in ("variety", "ambient_dim", "dim_aut", "projective_dim_aut", "dim_prolong_1", "dim_prolong_2", "dim_vertex", "seed"):
        if key in report:
            flat.append((key, report[key]))
    flat.append(("ideal_dims", ", ".join(f"I_{d}={n}" for d, n in report["ideal_dims"].items())))
    for k, v in report["checks"].items():
        flat.append((f"check.{k}", "n/a" if v is None else v))
    width = max(len(k) for k, _ in flat)
    for k, v in flat:
        lines.append(f"{k.ljust(width)}  {v}")
    for a in report["anomalies"]:
        lines.append(f"{'anomaly'.ljust(width)}  {a}")
    for att in report.get("attempts", []):
        lines.append(" ".join([f"{'attempt'.ljust(width)}  seed={att['seed']} ok={att['ok']}", *att["reasons"]]))
    return "\n".join(lines)
