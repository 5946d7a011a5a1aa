"""End-to-end verification of the identities, shared by the CLI and the test suite.

Each criterion is a function ``(bounds) -> (ok, detail)``.  Two bound
profiles exist: ``full`` (the exit criteria) and ``quick`` (smaller sizes for
a fast smoke run).  Everything is exact equality; there are no tolerances.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .bernoulli import (
    GeneralParams,
    beta_number,
    beta_numbers,
    defining_residual,
    functional_residual_egf,
    functional_residual_ogf,
    psi_qbase_product_closed,
    psi_qbase_closed,
    legendre_moment,
    legendre_moment_closed,
    legendre_moment_qz,
    moment_general,
    normalization_constant,
    psi,
    unnormalized_moment,
)
from .contfrac import (
    SERIES_IDS,
    closed_sfraction,
    contract,
    moment_series,
    recurrence_for_series,
    sfraction_series,
)
from .hankel import (
    closed_form_shift,
    closed_form_z,
    determinant,
    general_det_closed_form,
    general_moment_matrix,
    hankel_det,
    pn_at_zero,
    pn_at_zero_closed,
    product_formula,
    shifted_det_formula,
)
from .orthopoly import (
    Hahn,
    Jacobi,
    Legendre,
    generate_polys,
    hahn_recurrence,
    hypergeometric_Pn,
    jacobi_recurrence,
    legendre_recurrence,
    moment_functional,
    moments_from_recurrence,
)
from .qcombinat import phi21_terminating, qbase
from .ratfunc import FieldQ, PoleError, Series, q

__all__ = ["Criterion", "CRITERIA", "PROFILES", "classical_bernoulli", "run_all", "format_report"]

PROFILES = {
    "full": {
        "beta_q1": 12,
        "defining": 20,
        "functional": 12,
        "qbase_d": 6,
        "qbase_de": 4,
        "hahn_moments": 16,
        "legendre_moments": 10,
        "hankel_shift": 7,
        "hankel_z": 5,
        "shifted": 6,
        "contraction": 12,
        "sfraction_order": 12,
        "general_moments": 8,
        "general_symmetry": 5,
        "general_det": 4,
        "hyper_monic": 8,
        "orthogonality": 6,
        "vandermonde": 10,
    },
    "quick": {
        "beta_q1": 8,
        "defining": 10,
        "functional": 8,
        "qbase_d": 4,
        "qbase_de": 3,
        "hahn_moments": 8,
        "legendre_moments": 6,
        "hankel_shift": 5,
        "hankel_z": 4,
        "shifted": 4,
        "contraction": 6,
        "sfraction_order": 6,
        "general_moments": 5,
        "general_symmetry": 3,
        "general_det": 3,
        "hyper_monic": 5,
        "orthogonality": 4,
        "vandermonde": 6,
    },
}

SMALL_PARAMS = [
    GeneralParams(a, b, c, d) for a in (1, 2) for b in (1, 2) for c in (0, 1) for d in (0, 1)
]


def classical_bernoulli(n_max: int) -> list[Fraction]:
    """B_0..B_n_max from sum_{k<=n} binom(n+1, k) B_k = 0 (B_1 = -1/2)."""
    B = [Fraction(1)]
    for n in range(1, n_max + 1):
        B.append(-sum(comb(n + 1, k) * B[k] for k in range(n)) / (n + 1))
    return B


def _failures(pairs) -> list:
    return [label for label, ok in pairs if not ok]


def _summary(bad: list, total: int) -> tuple[bool, str]:
    if bad:
        shown = ", ".join(str(b) for b in bad[:5])
        return False, f"{len(bad)}/{total} mismatches: {shown}"
    return True, f"{total} checks"


# -- criteria ----------------------------------------------------------------


def _poly_q(*coeffs_desc: int) -> FieldQ:
    return FieldQ(list(reversed(coeffs_desc)))


def check_first_betas(bounds):
    p = _poly_q
    factored = [
        FieldQ(1),
        -1 / (q + 1),
        q / ((q + 1) * p(1, 1, 1)),
        -q * (q - 1) / ((q + 1) * p(1, 1, 1) * p(1, 0, 1)),
        q * p(1, -1, -2, -1, 1) / ((q + 1) * p(1, 1, 1) * p(1, 0, 1) * p(1, 1, 1, 1, 1)),
    ]
    return _summary(_failures((n, beta_number(n) == v) for n, v in enumerate(factored)), 5)


def check_classical_limit(bounds):
    n_max = bounds["beta_q1"]
    B = classical_bernoulli(n_max)
    return _summary(_failures((n, beta_number(n).eval(1) == B[n]) for n in range(n_max + 1)), n_max + 1)


def check_defining_relation(bounds):
    n_max = bounds["defining"]
    expected = lambda n: q - 1 if n == 0 else (FieldQ(1) if n == 1 else FieldQ(0))
    return _summary(
        _failures((n, defining_residual(n) == expected(n)) for n in range(n_max + 1)), n_max + 1
    )


def check_functional_equations(bounds):
    N = bounds["functional"]
    target = Series([q - 1, 1], N)
    pairs = [("ogf", functional_residual_ogf(N) == target), ("egf", functional_residual_egf(N) == target)]
    return _summary(_failures(pairs), 2)


def check_qbase_evaluations(bounds):
    d_max, de_max = bounds["qbase_d"], bounds["qbase_de"]
    pairs = []
    for d in range(d_max + 1):
        for i in range(d + 1):
            pairs.append(((i, d), psi(qbase(i, d)) == psi_qbase_closed(i, d)))
    for d in range(de_max + 1):
        for i in range(d + 1):
            for e in range(de_max + 1):
                for j in range(e + 1):
                    lhs = psi(qbase(i, d) * qbase(j, e))
                    pairs.append(((i, d, j, e), lhs == psi_qbase_product_closed(i, d, j, e)))
    return _summary(_failures(pairs), len(pairs))


def check_hahn_moments(bounds):
    N = bounds["hahn_moments"] + 1
    pairs = []
    for (c, d), shift in (((0, 0), 0), ((0, 1), 1), ((1, 1), 2)):
        mu = moments_from_recurrence(hahn_recurrence(c, d), N)
        base = beta_number(shift)
        for n in range(N):
            pairs.append(((c, d, n), mu[n] == beta_number(n + shift) / base))
    return _summary(_failures(pairs), len(pairs))


def check_legendre_moments(bounds):
    N = bounds["legendre_moments"] + 1
    mu = moments_from_recurrence(legendre_recurrence(), N)
    pairs = []
    for n in range(N):
        pairs.append((("recurrence", n), mu[n] == legendre_moment_qz(n)))
        pairs.append((("closed", n), legendre_moment(n) == legendre_moment_closed(n)))
        pairs.append((("z=0", n), mu[n].subs_z(0) == beta_number(n)))
    return _summary(_failures(pairs), len(pairs))


def check_hankel_closed_forms(bounds):
    n_max, nz = bounds["hankel_shift"], bounds["hankel_z"]
    betas = beta_numbers(2 * n_max + 3)
    pairs = []
    for k in range(4):
        for n in range(n_max + 1):
            pairs.append(((k, n), hankel_det(betas, n, k) == closed_form_shift(k, n)))
    L = [legendre_moment_qz(m) for m in range(max(2 * nz - 1, 1))]
    for n in range(nz + 1):
        pairs.append((("z", n), hankel_det(L, n, 0) == closed_form_z(n)))
    return _summary(_failures(pairs), len(pairs))


def check_shifted_determinants(bounds):
    n_max = bounds["shifted"]
    pairs = []
    for (c, d), shift in (((0, 0), 0), ((0, 1), 1), ((1, 1), 2)):
        rec = hahn_recurrence(c, d)
        mu = moments_from_recurrence(rec, 2 * n_max + 1)
        for n in range(n_max + 1):
            direct = hankel_det(mu, n, 1)
            d0 = hankel_det(mu, n, 0)
            pairs.append(((c, d, "q_n", n), direct == shifted_det_formula(rec, n)))
            pairs.append(((c, d, "p_n(0)", n), direct == (-1) ** n * pn_at_zero(rec, n) * d0))
            pairs.append(((c, d, "p_n(0) closed", n), pn_at_zero(rec, n) == pn_at_zero_closed(shift, n)))
    return _summary(_failures(pairs), len(pairs))


def check_sfractions(bounds):
    n_max, N = bounds["contraction"], bounds["sfraction_order"]
    pairs = []
    for sid in SERIES_IDS:
        rec = recurrence_for_series(sid)
        J = contract(closed_sfraction(sid, 2 * n_max + 1))
        for n in range(n_max + 1):
            pairs.append(((sid, "a", n), J.a_at(n) == rec.a(n)))
            if n >= 1:
                pairs.append(((sid, "b", n), J.b_at(n) == rec.b(n)))
        expanded = sfraction_series(closed_sfraction(sid, N + 1), N)
        pairs.append(((sid, "series"), expanded == moment_series(sid, N)))
    # the B2 coefficients have poles at q = 1
    poles = 0
    for c in closed_sfraction("B2", N).c:
        try:
            c.eval(1)
        except PoleError:
            poles += 1
    pairs.append((("B2", "pole at q=1"), poles > 0))
    return _summary(_failures(pairs), len(pairs))


def check_four_parameter_family(bounds):
    nm, ns, nd = bounds["general_moments"], bounds["general_symmetry"], bounds["general_det"]
    pairs = []
    for P in SMALL_PARAMS:
        mu = moments_from_recurrence(jacobi_recurrence(P), nm + 1)
        for n in range(nm + 1):
            pairs.append(((str(P), "moment", n), mu[n] == moment_general(n, P)))
        for n in range(nd + 1):
            pairs.append(((str(P), "det", n), determinant(general_moment_matrix(P, n)) == general_det_closed_form(P, n)))
        pairs.append(((str(P), "C"), normalization_constant(P) == unnormalized_moment(0, P)))
    for a in (1, 2):
        for b in (1, 2):
            for c in (0, 1, 2):
                for d in (0, 1, 2):
                    P = GeneralParams(a, b, c, d)
                    for n in range(ns + 1):
                        m = moment_general(n, P)
                        pairs.append(((str(P), "a<->b", n), m == moment_general(n, P.swap_ab())))
                        pairs.append(((str(P), "c<->d", n), m == moment_general(n, P.swap_cd())))
    b1, b2 = beta_number(1), beta_number(2)
    pairs.append((("C", "1,1,0,0"), normalization_constant(GeneralParams(1, 1, 0, 0)) == beta_number(0)))
    # x**2 Desc(x,-1) = -x, so the (0,1) constant is -beta_1
    pairs.append((("C", "1,1,0,1"), normalization_constant(GeneralParams(1, 1, 0, 1)) == -b1))
    pairs.append((("C", "1,1,1,0"), normalization_constant(GeneralParams(1, 1, 1, 0)) == -b1))
    pairs.append((("C", "1,1,1,1"), normalization_constant(GeneralParams(1, 1, 1, 1)) == b2))
    return _summary(_failures(pairs), len(pairs))


def check_hypergeometric(bounds):
    n_mon, n_orth = bounds["hyper_monic"], bounds["orthogonality"]
    pairs = []
    for c, d in ((0, 0), (0, 1), (1, 1)):
        ps = generate_polys(hahn_recurrence(c, d), n_mon + 1)
        for n in range(n_mon + 1):
            pairs.append(((f"Hahn({c},{d})", "monic", n), hypergeometric_Pn(Hahn(c, d), n).monic() == ps[n]))
    families = [Hahn(0, 0), Hahn(0, 1), Hahn(1, 1), Legendre()] + [Jacobi(P) for P in SMALL_PARAMS]
    for spec in families:
        form = moment_functional(spec)
        for n in range(1, n_orth + 1):
            pairs.append(((repr(spec), "orth", n), form(hypergeometric_Pn(spec, n)) == 0))
    return _summary(_failures(pairs), len(pairs))


def check_vandermonde(bounds):
    n_max = bounds["vandermonde"]
    pairs = [
        ((n, m), phi21_terminating(n, n + m, m + 1) == 0)
        for n in range(1, n_max + 1)
        for m in (1, 2, 3)
    ]
    return _summary(_failures(pairs), len(pairs))


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    check: Callable[[dict], tuple[bool, str]]


CRITERIA = [
    Criterion(1, "beta_0..beta_4 in factored form", check_first_betas),
    Criterion(2, "q=1 gives classical Bernoulli numbers", check_classical_limit),
    Criterion(3, "defining relation residual", check_defining_relation),
    Criterion(4, "OGF/EGF functional equations", check_functional_equations),
    Criterion(5, "Psi of q-binomial bases", check_qbase_evaluations),
    Criterion(6, "q-Hahn moments are shifted betas", check_hahn_moments),
    Criterion(7, "q-Legendre moments are integrated beta_n(z)", check_legendre_moments),
    Criterion(8, "Hankel determinant product formulas", check_hankel_closed_forms),
    Criterion(9, "shift-1 determinants via q_n and p_n(0)", check_shifted_determinants),
    Criterion(10, "S-fractions and contraction", check_sfractions),
    Criterion(11, "four-parameter moments and determinants", check_four_parameter_family),
    Criterion(12, "hypergeometric P_n and orthogonality", check_hypergeometric),
    Criterion(13, "terminating q-Vandermonde vanishing", check_vandermonde),
]


def run_all(profile: str = "full") -> list[tuple[Criterion, bool, str]]:
    bounds = PROFILES[profile]
    results = []
    for crit in CRITERIA:
        ok, detail = crit.check(bounds)
        results.append((crit, ok, detail))
    return results


def format_report(results, profile: str) -> str:
    lines = [f"verification profile: {profile}"]
    width = max(len(c.name) for c, _, _ in results)
    for crit, ok, detail in results:
        lines.append(f"{crit.number:>2}  {crit.name:<{width}}  {'PASS' if ok else 'FAIL'}  ({detail})")
    n_ok = sum(1 for _, ok, _ in results if ok)
    lines.append(f"{n_ok}/{len(results)} criteria passed")
    return "\n".join(lines)
