"""Key-value input files for the CLI.

INI syntax with up to four sections.  [threefold] names the variety,
either by hypersurface_degree or by explicit d/epsilon/tau (plus optional
picard_mode and vanishing_mode tokens).  [bundle] gives c1/c2/alpha and an
optional label.  [pullback] describes a bundle on projective 3-space with
an h1 window.  [sweep] describes a parameter grid.

All parse failures raise ParseError carrying a 1-based line number.
"""

from __future__ import annotations

import ast
import configparser
from dataclasses import dataclass

from .bundle import BundleInvariants
from .errors import ParseError, PreconditionViolatedError
from .pullback import P3BundleData
from .threefold import PicardMode, Threefold, VanishingMode, hypersurface

_THREEFOLD_KEYS = {
    "hypersurface_degree", "d", "epsilon", "tau", "picard_mode", "vanishing_mode",
}
_BUNDLE_KEYS = {"c1", "c2", "alpha", "label"}
_PULLBACK_KEYS = {"degree", "c1", "c2", "alpha", "window", "h1", "h1_exact"}
_SWEEP_KEYS = {
    "hypersurface_degrees", "d", "epsilon", "tau", "c1", "c2", "alpha", "out", "cap",
}


@dataclass(frozen=True)
class PullbackInput:
    degree: int
    data: P3BundleData


@dataclass(frozen=True)
class SweepInput:
    threefolds: tuple[Threefold, ...]
    c1_values: tuple[int, ...]
    c2_range: tuple[int, int]
    alpha_range: tuple[int, int]
    out: str | None
    cap: int | None


@dataclass(frozen=True)
class InputDoc:
    threefold: Threefold | None = None
    bundle: BundleInvariants | None = None
    label: str | None = None
    pullback: PullbackInput | None = None
    sweep: SweepInput | None = None


class _Source:
    """Raw text plus a best-effort line finder for error reports."""

    def __init__(self, text: str):
        self.lines = text.splitlines()

    def line_of(self, token: str) -> int:
        for i, line in enumerate(self.lines, start=1):
            stripped = line.strip()
            if stripped.startswith(f"[{token}]"):
                return i
            if stripped.startswith(token) and "=" in stripped:
                key = stripped.split("=", 1)[0].strip()
                if key == token:
                    return i
        return 0


def _fail(src: _Source, token: str, message: str) -> ParseError:
    return ParseError(message, line=src.line_of(token))


def _get_int(src: _Source, section, key: str) -> int:
    raw = section[key].strip()
    try:
        return int(raw)
    except ValueError:
        raise _fail(src, key, f"{key}: expected an integer, got {raw!r}") from None


def _get_range(src: _Source, section, key: str) -> tuple[int, int]:
    raw = section[key].strip()
    if ".." in raw:
        lo_s, _, hi_s = raw.partition("..")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise _fail(src, key, f"{key}: expected LO..HI, got {raw!r}") from None
    else:
        try:
            lo = hi = int(raw)
        except ValueError:
            raise _fail(src, key, f"{key}: expected LO..HI or an integer, got {raw!r}") from None
    if lo > hi:
        raise _fail(src, key, f"{key}: empty range {raw!r}")
    return lo, hi


def _check_keys(src: _Source, cp, name: str, allowed: set[str]) -> None:
    for key in cp[name]:
        if key not in allowed:
            raise _fail(src, key, f"unknown key {key!r} in [{name}]")


def _parse_modes(src: _Source, section) -> tuple[PicardMode | None, VanishingMode | None]:
    picard = None
    vanishing = None
    if "picard_mode" in section:
        raw = section["picard_mode"].strip()
        try:
            picard = PicardMode(raw)
        except ValueError:
            raise _fail(src, "picard_mode", f"picard_mode: expected z or num-z, got {raw!r}") from None
    if "vanishing_mode" in section:
        raw = section["vanishing_mode"].strip()
        try:
            vanishing = VanishingMode(raw)
        except ValueError:
            raise _fail(src, "vanishing_mode", f"vanishing_mode: expected c2 or c4, got {raw!r}") from None
    return picard, vanishing


def _parse_threefold(src: _Source, cp) -> Threefold:
    sec = cp["threefold"]
    _check_keys(src, cp, "threefold", _THREEFOLD_KEYS)
    picard, vanishing = _parse_modes(src, sec)
    if "hypersurface_degree" in sec:
        for key in ("d", "epsilon", "tau"):
            if key in sec:
                raise _fail(
                    src, key,
                    f"{key} conflicts with hypersurface_degree; give one or the other",
                )
        deg = _get_int(src, sec, "hypersurface_degree")
        try:
            return hypersurface(
                deg,
                picard_mode=picard or PicardMode.PIC_Z,
                vanishing_mode=vanishing or VanishingMode.FULL_C2,
            )
        except PreconditionViolatedError as exc:
            raise _fail(src, "hypersurface_degree", str(exc)) from None
    for key in ("d", "epsilon", "tau"):
        if key not in sec:
            raise _fail(src, "threefold", f"[threefold] needs {key} (or hypersurface_degree)")
    try:
        return Threefold(
            d=_get_int(src, sec, "d"),
            epsilon=_get_int(src, sec, "epsilon"),
            tau=_get_int(src, sec, "tau"),
            picard_mode=picard or PicardMode.PIC_Z,
            vanishing_mode=vanishing or VanishingMode.KODAIRA_C4,
        )
    except PreconditionViolatedError as exc:
        raise _fail(src, "d", str(exc)) from None


def _parse_bundle(src: _Source, cp) -> tuple[BundleInvariants, str | None]:
    sec = cp["bundle"]
    _check_keys(src, cp, "bundle", _BUNDLE_KEYS)
    for key in ("c1", "c2", "alpha"):
        if key not in sec:
            raise _fail(src, "bundle", f"[bundle] needs {key}")
    try:
        bundle = BundleInvariants(
            c1=_get_int(src, sec, "c1"),
            c2=_get_int(src, sec, "c2"),
            alpha=_get_int(src, sec, "alpha"),
        )
    except PreconditionViolatedError as exc:
        raise _fail(src, "c1", str(exc)) from None
    label = sec["label"].strip() if "label" in sec else None
    return bundle, label


def _parse_h1_table(src: _Source, raw: str) -> tuple[tuple[int, int], ...]:
    try:
        value = ast.literal_eval(raw)
    except (ValueError, SyntaxError):
        raise _fail(src, "h1", f"h1: expected a {{twist: value}} table, got {raw!r}") from None
    if not isinstance(value, dict) or not all(
        isinstance(k, int) and isinstance(v, int) for k, v in value.items()
    ):
        raise _fail(src, "h1", "h1: table keys and values must be integers")
    return tuple(sorted(value.items()))


def _parse_pullback(src: _Source, cp) -> PullbackInput:
    sec = cp["pullback"]
    _check_keys(src, cp, "pullback", _PULLBACK_KEYS)
    for key in ("degree", "c1", "c2", "alpha"):
        if key not in sec:
            raise _fail(src, "pullback", f"[pullback] needs {key}")
    degree = _get_int(src, sec, "degree")
    try:
        invariants = BundleInvariants(
            c1=_get_int(src, sec, "c1"),
            c2=_get_int(src, sec, "c2"),
            alpha=_get_int(src, sec, "alpha"),
        )
    except PreconditionViolatedError as exc:
        raise _fail(src, "c1", str(exc)) from None
    window = None
    table: tuple[tuple[int, int], ...] = ()
    if "window" in sec:
        window = _get_range(src, sec, "window")
        if "h1" not in sec:
            raise _fail(src, "window", "window given without an h1 table")
        table = _parse_h1_table(src, sec["h1"].strip())
    elif "h1" in sec:
        raise _fail(src, "h1", "h1 table given without a window")
    exact = False
    if "h1_exact" in sec:
        raw = sec["h1_exact"].strip().lower()
        if raw not in ("true", "false"):
            raise _fail(src, "h1_exact", f"h1_exact: expected true or false, got {raw!r}")
        exact = raw == "true"
    try:
        data = P3BundleData(invariants=invariants, window=window, h1_table=table, exact=exact)
    except PreconditionViolatedError as exc:
        raise _fail(src, "h1", str(exc)) from None
    if degree < 1:
        raise _fail(src, "degree", f"degree: cover degree must be >= 1, got {degree}")
    return PullbackInput(degree=degree, data=data)


def _parse_sweep(src: _Source, cp) -> SweepInput:
    sec = cp["sweep"]
    _check_keys(src, cp, "sweep", _SWEEP_KEYS)
    if "hypersurface_degrees" in sec:
        lo, hi = _get_range(src, sec, "hypersurface_degrees")
        if lo < 1:
            raise _fail(src, "hypersurface_degrees", "hypersurface degrees must be >= 1")
        threefolds = tuple(hypersurface(k) for k in range(lo, hi + 1))
    else:
        for key in ("d", "epsilon", "tau"):
            if key not in sec:
                raise _fail(
                    src, "sweep",
                    f"[sweep] needs {key} (or hypersurface_degrees)",
                )
        try:
            threefolds = (
                Threefold(
                    d=_get_int(src, sec, "d"),
                    epsilon=_get_int(src, sec, "epsilon"),
                    tau=_get_int(src, sec, "tau"),
                ),
            )
        except PreconditionViolatedError as exc:
            raise _fail(src, "d", str(exc)) from None
    for key in ("c1", "c2", "alpha"):
        if key not in sec:
            raise _fail(src, "sweep", f"[sweep] needs {key}")
    c1_raw = [part.strip() for part in sec["c1"].split(",")]
    c1_values = []
    for part in c1_raw:
        if part not in ("0", "-1"):
            raise _fail(src, "c1", f"c1: expected 0, -1 or 0,-1, got {sec['c1']!r}")
        c1_values.append(int(part))
    if len(set(c1_values)) != len(c1_values):
        raise _fail(src, "c1", "c1: repeated value")
    cap = _get_int(src, sec, "cap") if "cap" in sec else None
    if cap is not None and cap < 1:
        raise _fail(src, "cap", f"cap: must be >= 1, got {cap}")
    return SweepInput(
        threefolds=threefolds,
        c1_values=tuple(c1_values),
        c2_range=_get_range(src, sec, "c2"),
        alpha_range=_get_range(src, sec, "alpha"),
        out=sec["out"].strip() if "out" in sec else None,
        cap=cap,
    )


_SECTION_ORDER = ("threefold", "bundle", "pullback", "sweep")


def parse_input(text: str) -> InputDoc:
    """Parse an input document; sections may appear in any combination."""
    src = _Source(text)
    cp = configparser.ConfigParser(interpolation=None)
    try:
        cp.read_string(text)
    except configparser.ParsingError as exc:
        line = exc.errors[0][0] if exc.errors else 0
        raise ParseError(f"malformed input: {exc.message.splitlines()[0]}", line=line) from None
    except configparser.Error as exc:
        line = getattr(exc, "lineno", 0) or 0
        raise ParseError(f"malformed input: {exc.message}", line=line) from None
    for name in cp.sections():
        if name not in _SECTION_ORDER:
            raise _fail(src, name, f"unknown section [{name}]")
    threefold = _parse_threefold(src, cp) if cp.has_section("threefold") else None
    bundle, label = (
        _parse_bundle(src, cp) if cp.has_section("bundle") else (None, None)
    )
    pullback = _parse_pullback(src, cp) if cp.has_section("pullback") else None
    sweep = _parse_sweep(src, cp) if cp.has_section("sweep") else None
    if not any((threefold, bundle, pullback, sweep)):
        raise ParseError("input file has no recognized sections", line=0)
    return InputDoc(
        threefold=threefold, bundle=bundle, label=label, pullback=pullback, sweep=sweep
    )


def load_input(path: str) -> InputDoc:
    with open(path, encoding="utf-8") as handle:
        return parse_input(handle.read())
