"""Report serialization: human text and a stable structured form.

The structured form is plain JSON with sorted keys.  Rationals are
strings "p/q" (or "p"), surds are {base, radicand} objects with floor and
integrality included for consumers without exact arithmetic.  to-dict and
from-dict round-trip exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .bundle import BundleInvariants, DerivedInvariants, Regime
from .exactnum import Surd, floor_surd, rat_str
from .nonvanishing import (
    AcmKind,
    AcmObstruction,
    AnalysisReport,
    NonvanishingCertificate,
    Theorem,
)
from .threefold import PicardMode, Threefold, ValidationReport, VanishingMode

SCHEMA_VERSION = 1


def _surd_to_dict(s: Surd) -> dict[str, Any]:
    return {
        "base": rat_str(s.base),
        "radicand": rat_str(s.radicand),
        "floor": floor_surd(s),
        "is_integer": s.is_integer(),
    }


def _surd_from_dict(obj: dict[str, Any]) -> Surd:
    return Surd(base=Fraction(obj["base"]), radicand=Fraction(obj["radicand"]))


def report_to_dict(report: AnalysisReport) -> dict[str, Any]:
    X, B, D = report.threefold, report.bundle, report.derived
    return {
        "schema_version": SCHEMA_VERSION,
        "threefold": {
            "d": X.d,
            "epsilon": X.epsilon,
            "tau": X.tau,
            "picard_mode": X.picard_mode.value,
            "vanishing_mode": X.vanishing_mode.value,
        },
        "bundle": {"c1": B.c1, "c2": B.c2, "alpha": B.alpha},
        "label": report.label,
        "validation": {
            "ok": report.validation.ok,
            "violations": [
                {"rule": rule, "message": message}
                for rule, message in report.validation.violations
            ],
        },
        "derived": {
            "delta": D.delta,
            "theta": rat_str(D.theta),
            "zeta0": rat_str(D.zeta0),
            "w0": D.w0,
            "lam": rat_str(D.lam),
            "zeta": None if D.zeta is None else _surd_to_dict(D.zeta),
            "alpha_bar": D.alpha_bar,
        },
        "regime": report.regime.name,
        "split": report.split,
        "certificates": [
            {
                "theorem": cert.theorem.value,
                "n": cert.n,
                "lower_bound": rat_str(cert.lower_bound),
                "guard_ok": cert.guard_ok,
                "supporting": [t.value for t in cert.supporting],
            }
            for cert in report.certificates
        ],
        "acm_obstructions": [
            {"kind": obs.kind.value, "detail": obs.detail}
            for obs in report.acm_obstructions
        ],
        "notes": list(report.notes),
        "chi_table": (
            None
            if report.chi_table is None
            else [[n, a, b] for n, a, b in report.chi_table]
        ),
    }


def report_from_dict(obj: dict[str, Any]) -> AnalysisReport:
    if obj.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {obj.get('schema_version')!r}")
    tf = obj["threefold"]
    X = Threefold(
        d=tf["d"],
        epsilon=tf["epsilon"],
        tau=tf["tau"],
        picard_mode=PicardMode(tf["picard_mode"]),
        vanishing_mode=VanishingMode(tf["vanishing_mode"]),
    )
    bd = obj["bundle"]
    B = BundleInvariants(c1=bd["c1"], c2=bd["c2"], alpha=bd["alpha"])
    dd = obj["derived"]
    D = DerivedInvariants(
        delta=dd["delta"],
        theta=Fraction(dd["theta"]),
        zeta0=Fraction(dd["zeta0"]),
        w0=dd["w0"],
        lam=Fraction(dd["lam"]),
        zeta=None if dd["zeta"] is None else _surd_from_dict(dd["zeta"]),
        alpha_bar=dd["alpha_bar"],
    )
    return AnalysisReport(
        threefold=X,
        bundle=B,
        label=obj["label"],
        validation=ValidationReport(
            ok=obj["validation"]["ok"],
            violations=tuple(
                (v["rule"], v["message"]) for v in obj["validation"]["violations"]
            ),
        ),
        derived=D,
        regime=Regime[obj["regime"]],
        split=obj["split"],
        certificates=tuple(
            NonvanishingCertificate(
                theorem=Theorem(c["theorem"]),
                n=c["n"],
                lower_bound=Fraction(c["lower_bound"]),
                guard_ok=c["guard_ok"],
                supporting=tuple(Theorem(t) for t in c["supporting"]),
            )
            for c in obj["certificates"]
        ),
        acm_obstructions=tuple(
            AcmObstruction(kind=AcmKind(o["kind"]), detail=o["detail"])
            for o in obj["acm_obstructions"]
        ),
        notes=tuple(obj["notes"]),
        chi_table=(
            None
            if obj["chi_table"] is None
            else tuple((n, a, b) for n, a, b in obj["chi_table"])
        ),
    )


def report_to_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2) + "\n"


def _zeta_line(D: DerivedInvariants) -> str:
    if D.zeta is None:
        return f"zeta: none (theta = {rat_str(D.theta)} < 0)"
    s = D.zeta
    body = f"zeta = {rat_str(s.base)} + sqrt({rat_str(s.radicand)})"
    if s.is_integer():
        return f"{body} = {rat_str(s.as_rational())} (alpha_bar = {D.alpha_bar})"
    return f"{body} (floor {D.alpha_bar - 1}, alpha_bar = {D.alpha_bar})"


def report_to_text(report: AnalysisReport) -> str:
    X, B, D = report.threefold, report.bundle, report.derived
    lines = [
        f"threefold: d={X.d} epsilon={X.epsilon} tau={X.tau} "
        f"(picard={X.picard_mode.value}, vanishing={X.vanishing_mode.value})",
        f"bundle: c1={B.c1} c2={B.c2} alpha={B.alpha}"
        + (f"  [{report.label}]" if report.label else ""),
        "validation: ok"
        if report.validation.ok
        else "validation: FAILED "
        + ", ".join(rule for rule, _ in report.validation.violations),
        f"derived: delta={D.delta} theta={rat_str(D.theta)} "
        f"zeta0={rat_str(D.zeta0)} w0={D.w0} lam={rat_str(D.lam)}",
        _zeta_line(D),
        f"regime: {report.regime.name}",
        f"split: {'yes' if report.split else 'no'}",
    ]
    if report.certificates:
        lines.append("certificates:")
        for cert in report.certificates:
            extra = "" if cert.guard_ok else "  GUARD FAILED"
            also = (
                "; also " + ", ".join(t.value for t in cert.supporting)
                if cert.supporting
                else ""
            )
            lines.append(
                f"  n={cert.n}  h1 >= {rat_str(cert.lower_bound)}  "
                f"[{cert.theorem.value}{also}]{extra}"
            )
    else:
        lines.append("certificates: none")
    if report.acm_obstructions:
        lines.append("acm obstructions:")
        for obs in report.acm_obstructions:
            lines.append(f"  {obs.kind.value}: {obs.detail}")
    else:
        lines.append("acm obstructions: none (not a proof of ACM)")
    if report.chi_table is not None:
        lines.append("chi table (n, chi(O(n)), chi(E(n))):")
        for n, a, b in report.chi_table:
            lines.append(f"  {n}  {a}  {b}")
    if report.notes:
        lines.append("notes:")
        for note in report.notes:
            lines.append(f"  - {note}")
    return "\n".join(lines) + "\n"
