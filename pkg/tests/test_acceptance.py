"""Acceptance gate: eight criteria, one printed pass/fail line each.

Run with pytest; the summary lines print straight to the terminal so the
gate is readable even inside a full suite run.
"""

import math
import random
from contextlib import contextmanager
from decimal import ROUND_FLOOR, Decimal, localcontext
from fractions import Fraction as F

import pytest

from nonvanish.bundle import BundleInvariants, chi_E, derive
from nonvanish.cli import main
from nonvanish.errors import NotApplicableError
from nonvanish.exactnum import (
    Cubic,
    Ordering,
    Surd,
    cubic_sign,
    cubic_unique_root_bracket,
    floor_surd,
    sqrt_exact,
    surd_cmp,
)
from nonvanish.inputs import load_input
from nonvanish.nonvanishing import (
    Theorem,
    analyze,
    h1_h2_difference,
    h1_h2_difference_via_chi,
    thm_nonstable_basic,
    thm_nonstable_cubic,
    thm_nonstable_quadratic,
)
from nonvanish.pullback import aggregate_h1, delta_of, pullback_invariants
from nonvanish.sweep import SweepSpec, run_sweep
from nonvanish.threefold import (
    NEGATIVE_EPSILON_PAIRS,
    Threefold,
    chi_O,
    hypersurface,
    validate,
)

SEED = 20260819

VALID_TRIPLES = [
    (1, -4, 6), (2, -3, 8), (3, -2, 12), (4, -1, 24),
    (5, 0, 50), (2, 0, 48), (3, 0, 2), (1, 4, 6), (2, 2, 24),
] + [(d, d - 5, d * (10 - 5 * d + d * d)) for d in range(6, 11)]

GOLDEN_FIXTURES = [
    "quadric_stable.nv",
    "quintic_nonstable.nv",
    "quadric_skew_lines.nv",
    "quadric_nonstable.nv",
    "cubic_engine.nv",
    "split_p3.nv",
    "numz_cover.nv",
]


@pytest.fixture
def announce(capsys):
    @contextmanager
    def run(num: int, title: str):
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"[acceptance] criterion {num} FAIL  {title}")
            raise
        with capsys.disabled():
            print(f"[acceptance] criterion {num} PASS  {title}")

    return run


def test_criterion_1_golden_derived_invariants(announce):
    with announce(1, "golden derived invariants"):
        D1 = derive(hypersurface(2), BundleInvariants(0, 4, 1))
        assert (D1.zeta0, D1.w0, D1.theta, D1.delta) == (F(-3, 2), -1, F(25, 4), 6)
        assert D1.zeta.as_rational() == F(1)
        assert D1.alpha_bar == 2

        D2 = derive(hypersurface(5), BundleInvariants(0, 45, -3))
        assert (D2.delta, D2.zeta0) == (90, F(0))

        D3 = derive(hypersurface(2), BundleInvariants(-1, 2, 1))
        assert (D3.theta, D3.zeta0, D3.alpha_bar) == (F(5, 2), F(-1), 1)

        D4 = derive(hypersurface(2), BundleInvariants(0, 8, 0))
        assert (D4.delta, D4.zeta0) == (8, F(-3, 2))


def test_criterion_2_certificate_sets(announce):
    with announce(2, "certificate sets for the worked examples"):
        r3 = analyze(hypersurface(2), BundleInvariants(-1, 2, 1))
        assert [c.n for c in r3.certificates] == [0]

        r1 = analyze(hypersurface(2), BundleInvariants(0, 4, 1))
        assert [c.n for c in r1.certificates] == [-1, 0, 1]
        by_n = {c.n: c for c in r1.certificates}
        assert by_n[1].theorem is Theorem.THETA_INTEGER_EDGE

        X4, B4 = hypersurface(2), BundleInvariants(0, 8, 0)
        quad = thm_nonstable_quadratic(X4, B4, derive(X4, B4))
        assert max(c.n for c in quad) == 3

        X2, B2 = hypersurface(5), BundleInvariants(0, 45, -3)
        lin = thm_nonstable_basic(X2, B2, derive(X2, B2))
        assert [(c.n, c.lower_bound) for c in lin] == [(1, 90), (2, 180)]


def test_criterion_3_difference_oracle(announce):
    with announce(3, "h1-h2 difference equals the chi combination, 10^4 cases"):
        rng = random.Random(SEED)
        checked = 0
        while checked < 10_000:
            d, eps, tau = rng.choice(VALID_TRIPLES)
            X = Threefold(d, eps, tau)
            c1 = rng.choice((0, -1))
            alpha_max = min((-(eps + c1 + 2)) // 2, 0)
            B = BundleInvariants(c1, rng.randint(-60, 60), alpha_max - rng.randint(0, 5))
            D = derive(X, B)
            lo = math.ceil(D.zeta0)
            hi = -B.alpha - B.c1 - 1
            assert lo <= hi
            n = rng.randint(lo, hi)
            assert h1_h2_difference(X, B, D, n) == h1_h2_difference_via_chi(X, B, D, n)
            checked += 1


def test_criterion_4_sieve(announce):
    with announce(4, "validation sieve acceptance set"):
        forced_d = {-4: 1, -3: 2}
        accepted = set()
        for eps in range(-10, 0):
            for tau in range(-100, 101):
                d = forced_d.get(eps, 3)
                if validate(d, eps, tau).ok:
                    accepted.add((eps, tau))
        assert accepted == set(NEGATIVE_EPSILON_PAIRS)

        for d in range(1, 101):
            X = hypersurface(d)
            assert validate(X.d, X.epsilon, X.tau).ok
            assert X.tau == d * (10 - 5 * d + d * d)


def test_criterion_5_split_degeneracy(announce):
    with announce(5, "split fixtures certify nothing, 10^3 cases"):
        rng = random.Random(SEED + 1)
        for _ in range(1_000):
            d, eps, tau = rng.choice(VALID_TRIPLES)
            X = Threefold(d, eps, tau)
            c1 = rng.choice((0, -1))
            alpha = rng.randint(-5, 0)
            c2 = -d * alpha * alpha - c1 * d * alpha
            B = BundleInvariants(c1, c2, alpha)
            assert validate(d, eps, tau).ok
            D = derive(X, B)
            assert D.delta == 0

            assert thm_nonstable_basic(X, B, D) == []
            try:
                assert thm_nonstable_quadratic(X, B, D) == []
            except NotApplicableError:
                pass
            with pytest.raises(NotApplicableError):
                thm_nonstable_cubic(X, B, D)

            hi = -B.alpha - B.c1 - 1
            if D.zeta0 <= hi:
                n = rng.randint(math.ceil(D.zeta0), hi)
                assert h1_h2_difference(X, B, D, n) == 0
                assert h1_h2_difference_via_chi(X, B, D, n) == 0


def _random_fraction(rng, lo, hi, max_den):
    return F(rng.randint(lo, hi), rng.randint(1, max_den))


def test_criterion_6_exact_arithmetic(announce, fixture_path):
    with announce(6, "exact arithmetic vs 100-digit decimal oracle"):
        rng = random.Random(SEED + 2)
        with localcontext() as ctx:
            ctx.prec = 120

            def dec(fr):
                return Decimal(fr.numerator) / Decimal(fr.denominator)

            for _ in range(10_000):
                base = _random_fraction(rng, -(10**6), 10**6, 1000)
                if rng.random() < 0.4:
                    root = _random_fraction(rng, 0, 1000, 100)
                    radicand = root * root
                else:
                    radicand = _random_fraction(rng, 0, 10**6, 1000)
                s = Surd(base, radicand)

                roll = rng.random()
                if roll < 0.2:
                    x = base + F(rng.randint(-3, 3))
                elif roll < 0.4 and sqrt_exact(radicand) is not None:
                    x = base + sqrt_exact(radicand)
                else:
                    x = _random_fraction(rng, -(10**6), 10**6, 1000)

                exact_root = sqrt_exact(radicand)
                if exact_root is not None:
                    # independent perfect-square route
                    assert exact_root * exact_root == radicand
                    value = base + exact_root
                    expected = (
                        Ordering.LESS if x < value
                        else Ordering.GREATER if x > value
                        else Ordering.EQUAL
                    )
                    expected_floor = math.floor(value)
                else:
                    diff = dec(x) - (dec(base) + dec(radicand).sqrt())
                    expected = Ordering.LESS if diff < 0 else Ordering.GREATER
                    value_dec = dec(base) + dec(radicand).sqrt()
                    expected_floor = int(
                        value_dec.to_integral_value(rounding=ROUND_FLOOR)
                    )
                    assert surd_cmp(x, s) is not Ordering.EQUAL

                assert surd_cmp(x, s) is expected
                assert floor_surd(s) == expected_floor

        # brackets: sign-straddle and nesting under width refinement
        for _ in range(300):
            p = _random_fraction(rng, 0, 1000, 50)
            q = _random_fraction(rng, -(10**6), 10**6, 50)
            f = Cubic(p, q)
            prev = None
            for k in (2, 6, 12):
                width = F(1, 10**k)
                lo, hi = cubic_unique_root_bracket(f, width)
                assert lo < hi and hi - lo <= width
                assert cubic_sign(f, lo) <= 0 <= cubic_sign(f, hi)
                if prev is not None:
                    assert prev[0] <= lo and hi <= prev[1]
                prev = (lo, hi)

        # chi integrality on every fixture realized by a hypersurface
        realized = [
            "quadric_stable.nv", "quintic_nonstable.nv", "quadric_skew_lines.nv",
            "quadric_nonstable.nv", "split_p3.nv", "pullback_quadric.nv",
            "pullback_quintic.nv", "pullback_beats_table.nv",
        ]
        for name in realized:
            doc = load_input(fixture_path(name))
            X = doc.threefold
            B = doc.bundle
            if B is None and doc.pullback is not None:
                B = pullback_invariants(doc.pullback.degree, doc.pullback.data.invariants)
            D = derive(X, B)
            for n in range(-50, 51):
                chi_O(X, n)
                chi_E(X, D, n)


def test_criterion_7_pullback(announce, fixture_path):
    with announce(7, "pull-back aggregation and invariant transport"):
        nonzero_at = {
            "pullback_quadric.nv": 1,
            "pullback_quintic.nv": 16,
            "pullback_beats_table.nv": 3,
        }
        for name, twist in nonzero_at.items():
            doc = load_input(fixture_path(name))
            pb = doc.pullback
            assert aggregate_h1(pb.degree, pb.data, twist) > 0

        rng = random.Random(SEED + 3)
        for _ in range(1_000):
            d = rng.randint(1, 20)
            E = BundleInvariants(
                rng.choice((0, -1)), rng.randint(-50, 50), rng.randint(-8, 8)
            )
            Fb = pullback_invariants(d, E)
            assert delta_of(d, Fb) == d * delta_of(1, E)


def test_criterion_8_determinism(announce, fixture_path, tmp_path):
    with announce(8, "byte-identical reports and order-independent sweeps"):
        for name in GOLDEN_FIXTURES:
            outputs = set()
            for i in range(5):
                out = tmp_path / f"{name}.{i}.json"
                code = main([
                    "analyze", fixture_path(name),
                    "--format", "structured", "--out", str(out),
                ])
                assert code == 0
                outputs.add(out.read_bytes())
            assert len(outputs) == 1, f"nondeterministic output for {name}"

        spec = SweepSpec(
            threefolds=(hypersurface(2),),
            c1_values=(0,),
            c2_range=(0, 10),
            alpha_range=(-5, 5),
        )
        rows_by_jobs = [run_sweep(spec, jobs=j) for j in (1, 2, 3)]
        assert rows_by_jobs[0] == rows_by_jobs[1] == rows_by_jobs[2]
