"""Named verification suites over a chosen group, producing check lists.

Each suite is a deterministic function of (group, tolerance, seed) returning
a list of check records {name, residual?, tol, pass, detail}; the CLI wraps
them into reports. Residual-free checks are boolean facts (span conditions,
dimension counts).
"""

from __future__ import annotations

import numpy as np

from .algebra import LinearMap, StarAlgebra, check_star_hom, generated_algebra
from .convolution import (
    functional_basis, functional_norm, group_function_functional, involution,
    is_coinvolutive, is_nondegenerate_hopf, ideal_dimensions, module_action,
    point_functional, slice_corep, star_product,
)
from .corep import (
    Corepresentation, action_to_coaction, corep_direct_sum, trivial_coaction,
    verify_corepresentation, verify_covariant,
)
from .crossed import (
    biduality_check, canonical_dual_model_iso, crossed_product_hopf,
    crossed_report, dual_hopf, dual_pair_probe, full_crossed_product,
    integrated_form, sample_covariant_pairs, transport_corep,
    uniqueness_isomorphism, verify_hopf_isomorphism,
)
from .groups import Cocycle, FiniteGroup, trivial_cocycle
from .hopf import hopf_report, verify_coassociativity
from .models import (
    function_algebra_hopf, group_algebra_hopf, translation_action,
    twisted_delta_defect,
)
from .multunitary import (
    from_covariant_pair, kac_takesaki, leg_algebras, pentagon_check,
    random_pentagon_search,
)
from .tensor import dagger, eye, frob, kron, span_dim

__all__ = ["run_suite_checks"]


def _check(name, tol, passed, residual=None, detail=""):
    rec = {"name": name}
    if residual is not None:
        rec["residual"] = float(residual)
    rec["tol"] = float(tol)
    rec["pass"] = bool(passed)
    rec["detail"] = detail
    return rec


def _res(name, residual, tol, detail=""):
    return _check(name, tol, residual <= tol, residual=residual, detail=detail)


def _models(G: FiniteGroup):
    return function_algebra_hopf(G), group_algebra_hopf(G)


def suite_hopf_axioms(G, tol, seed):
    checks = []
    for H in _models(G):
        rep = hopf_report(H, tol)
        lbl = H.label
        checks.append(_res(f"{lbl}: comultiplication *-homomorphism", rep.hom.max_residual, tol))
        checks.append(_check(f"{lbl}: comultiplication injective", tol, rep.hom.injective))
        checks.append(_res(f"{lbl}: coassociativity", rep.coassociativity, tol))
        checks.append(_res(f"{lbl}: lands in the tensor square", rep.membership, tol))
        checks.append(_check(f"{lbl}: right-simplifiable", tol, rep.right_simplifiable))
        checks.append(_check(f"{lbl}: left-simplifiable", tol, rep.left_simplifiable))
        pair = verify_covariant(H.regular_pair, tol)
        checks.append(_res(f"{lbl}: designated pair covariant", pair.max_residual, tol))
    return checks


def suite_corep(G, tol, seed):
    rng = np.random.default_rng(seed)
    checks = []
    fH, gH = _models(G)
    for H in (fH, gH):
        V = H.universal_corep
        rep = verify_corepresentation(V, tol)
        checks.append(_res(f"{H.label}: designated corepresentation", rep.max_residual, tol))
        dsum = verify_corepresentation(corep_direct_sum(V, V), tol)
        checks.append(_res(f"{H.label}: direct sum corepresentation", dsum.max_residual, tol))
        fb = functional_basis(H)
        f = sum((rng.standard_normal() + 1j * rng.standard_normal()) * b for b in fb)
        g = sum((rng.standard_normal() + 1j * rng.standard_normal()) * b for b in fb)
        lhs = slice_corep(V, f) @ slice_corep(V, g)
        rhs = slice_corep(V, star_product(f, g))
        checks.append(_res(f"{H.label}: slice product law", frob(lhs - rhs), tol))
    # transported corepresentation through a classical crossed product
    if G.order <= 4:
        A, autos = translation_action(G)
        system = action_to_coaction(A, fH, autos)
        tag = "translation system"
    else:
        A = StarAlgebra(1, [eye(1)])
        system = action_to_coaction(A, fH, [LinearMap(A, [eye(1)]) for _ in G.elements])
        tag = "trivial system"
    X = full_crossed_product(system, tol)
    Hx = crossed_product_hopf(X, tol)
    T = transport_corep(X, Hx, gH.universal_corep)
    rep = verify_corepresentation(T, tol)
    checks.append(_res(f"transported corepresentation ({tag})", rep.max_residual, tol))
    return checks


def suite_convolution(G, tol, seed):
    rng = np.random.default_rng(seed)
    checks = []
    fH, gH = _models(G)
    n = G.order
    # group law between point masses on the function model
    res = 0.0
    for s in G.elements:
        for t in G.elements:
            prod = star_product(point_functional(fH, s), point_functional(fH, t))
            res = max(res, float(np.linalg.norm(
                (prod - point_functional(fH, G.mul(s, t))).values)))
    checks.append(_res(f"{fH.label}: point masses convolve by the group law", res, min(tol, 1e-12)))
    # pointwise product on the group model
    a = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    b = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    fa = group_function_functional(gH, a)
    fb_ = group_function_functional(gH, b)
    res = float(np.linalg.norm(
        (star_product(fa, fb_) - group_function_functional(gH, a * b)).values))
    checks.append(_res(f"{gH.label}: convolution is pointwise multiplication", res, tol))
    for H in (fH, gH):
        fb = functional_basis(H)
        def rand():
            return sum((rng.standard_normal() + 1j * rng.standard_normal()) * u for u in fb)
        f, g, hq = rand(), rand(), rand()
        assoc = float(np.linalg.norm(
            (star_product(star_product(f, g), hq) - star_product(f, star_product(g, hq))).values))
        checks.append(_res(f"{H.label}: convolution associativity", assoc, tol))
        inv2 = float(np.linalg.norm((involution(involution(f)) - f).values))
        checks.append(_res(f"{H.label}: double involution", inv2, tol))
        anti = float(np.linalg.norm(
            (involution(star_product(f, g))
             - star_product(involution(g), involution(f))).values))
        checks.append(_res(f"{H.label}: involution is anti-multiplicative", anti, tol))
        a0, m, a_s = ideal_dimensions(H, tol)
        checks.append(_check(f"{H.label}: degeneracy ideal is zero", tol, m == 0,
                             detail=f"dims: functionals {a0}, ideal {m}, quotient {a_s}"))
        checks.append(_check(f"{H.label}: functional involution exists", tol,
                             is_coinvolutive(H, tol)))
        sub = functional_norm(star_product(f, g)) - functional_norm(f) * functional_norm(g)
        checks.append(_check(f"{H.label}: convolution norm submultiplicative", tol,
                             sub <= tol, detail=f"slack {max(0.0, -sub):.3e}"))
    norm_res = max(abs(functional_norm(point_functional(fH, s)) - 1.0) for s in G.elements)
    checks.append(_res(f"{fH.label}: point masses have norm one", norm_res, max(tol, 1e-8)))
    total = functional_norm(group_function_functional(fH, np.ones(n)))
    checks.append(_res(f"{fH.label}: sum of point masses has norm {n}",
                       abs(total - n), max(tol, 1e-8)))
    mod = 0.0
    for s in G.elements:
        for t in G.elements:
            lhs = module_action(point_functional(fH, s), _unit(n, t))
            rhs = point_functional(fH, s) * (1.0 if s == t else 0.0)
            mod = max(mod, float(np.linalg.norm((lhs - rhs).values)))
    checks.append(_res(f"{fH.label}: module action on diagonal units", mod, tol))
    return checks


def suite_crossed_product(G, tol, seed):
    checks = []
    fH, gH = _models(G)
    n = G.order
    A, autos = translation_action(G)
    system = action_to_coaction(A, fH, autos)
    X = full_crossed_product(system, tol)
    checks.append(_check(f"dim(B) = dim(A)*|G| = {A.dim * n}", tol, X.dim == A.dim * n,
                         detail=f"got {X.dim}"))
    wed = X.algebra.wedderburn(seed=seed)
    checks.append(_check(f"translation system lands on one full block of size {n}", tol,
                         wed.block_dims == [n], detail=f"blocks {wed.block_dims}"))
    rep = crossed_report(X, tol)
    checks.append(_res("embedding/unit pair is a covariant homomorphism",
                       max(rep.covariance.max_residual, rep.j_hom.max_residual), tol))
    checks.append(_check("canonical spanning family spans", tol, rep.span_condition))
    checks.append(_res("unit slices stay inside the crossed product", rep.legs_in_B, tol))
    checks.append(_res("slice adjoint law", rep.adjoint_law, tol))
    checks.append(_res("slice product law", rep.product_law, tol))
    for i, P in enumerate(sample_covariant_pairs(X)):
        form = integrated_form(X, P, tol)
        checks.append(_res(
            f"integrated form on sampled pair {i} (carrier dim {P.repdim})",
            max(form.welldef_res, form.hom.max_residual,
                form.factor_rep_res, form.factor_corep_res), tol))
    _, form, onto = uniqueness_isomorphism(X, seed=seed, tol=tol)
    checks.append(_res("uniqueness: shuffled model is isomorphic",
                       max(form.welldef_res, form.hom.max_residual, form.factor_rep_res,
                           form.factor_corep_res, onto), tol))
    scalars = StarAlgebra(1, [eye(1)])
    Xs = full_crossed_product(trivial_coaction(scalars, gH), tol)
    comm = max(frob(a @ b - b @ a) for a in Xs.algebra.basis for b in Xs.algebra.basis)
    checks.append(_check(f"scalars by {gH.label}: dim {n} and commutative", tol,
                         Xs.dim == n and comm <= tol, detail=f"dim {Xs.dim}"))
    return checks


def suite_dual(G, tol, seed):
    checks = []
    fH, gH = _models(G)
    for H, expected, exp_label in ((fH, group_algebra_hopf(G), "group model"),
                                   (gH, function_algebra_hopf(G), "function model")):
        D = dual_hopf(H, tol)
        checks.append(_res(f"{H.label}: canonical unitary corepresentation laws",
                           D.w_corep.max_residual, tol))
        checks.append(_res(f"{H.label}: dual comultiplication lands in the square",
                           D.delta_hat_membership, tol))
        checks.append(_res(f"{H.label}: dual comultiplication on the unitary",
                           D.delta_on_w_res, tol))
        checks.append(_res(f"{H.label}: flipped unitary corepresents the dual",
                           D.v_corep_res, tol))
        checks.append(_res(f"{H.label}: functional embedding multiplicative",
                           D.psi_mult_res, tol))
        checks.append(_res(f"{H.label}: functional embedding involutive",
                           D.psi_star_res, tol))
        checks.append(_check(f"{H.label}: functional embedding onto", tol, D.onto))
        checks.append(_res(f"{H.label}: dual coassociativity",
                           verify_coassociativity(D.hat), tol))
        iso = verify_hopf_isomorphism(canonical_dual_model_iso(D, expected), D.hat,
                                      expected, tol)
        checks.append(_res(f"{H.label}: dual is the {exp_label}",
                           max(iso.hom.max_residual, iso.membership, iso.comult_res),
                           tol, detail=f"bijective={iso.bijective}"))
    probe = dual_pair_probe(gH, tol)
    if G.is_abelian():
        checks.append(_check(f"{gH.label}: natural dual pair probe (recorded)", tol, True,
                             detail=f"covariance residual {probe.covariance_res:.3e}"))
    else:
        checks.append(_check(f"{gH.label}: natural dual pair fails covariance", 1e-2,
                             probe.covariance_res >= 1e-2,
                             detail=f"covariance residual {probe.covariance_res:.3e}"))
    return checks


def suite_biduality(G, tol, seed):
    checks = []
    for H in _models(G):
        rep = biduality_check(H, tol)
        checks.append(_res(f"{H.label}: evaluation functionals recover the algebra",
                           max(rep.eval_slice_res, rep.eval_consistency), tol))
        checks.append(_check(f"{H.label}: dual slices span", tol, rep.span_condition))
        iso = rep.double_dual
        checks.append(_res(f"{H.label}: double dual is the original",
                           max(iso.hom.max_residual, iso.membership, iso.comult_res),
                           tol, detail=f"bijective={iso.bijective}"))
    return checks


def suite_pentagon(G, tol, seed):
    checks = []
    n = G.order
    W = kac_takesaki(G)
    checks.append(_res("translation unitary satisfies the pentagon identity",
                       pentagon_check(W), min(tol, 1e-12)))
    left, right = leg_algebras(W, tol)
    checks.append(_check(f"leg algebras have dimensions ({n}, {n})", tol,
                         left.dim == n and right.dim == n,
                         detail=f"got ({left.dim}, {right.dim})"))
    joint = generated_algebra(n, list(left.basis) + list(right.basis), tol)
    checks.append(_check(f"legs jointly generate the full {n}x{n} algebra", tol,
                         joint.dim == n * n, detail=f"dim {joint.dim}"))
    for H in _models(G):
        res = pentagon_check(from_covariant_pair(H.regular_pair))
        checks.append(_res(f"{H.label}: designated pair gives a multiplicative unitary",
                           res, tol))
    best, hits = random_pentagon_search(2, trials=5, seed=seed)
    checks.append(_check("random unitaries fail the pentagon (recorded)", tol, True,
                         detail=f"best residual {best:.3e}, hits {len(hits)}"))
    return checks


def suite_counterexample(G, tol, seed, cocycle: Cocycle | None = None):
    checks = []
    if cocycle is None:
        from .groups import pauli_cocycle
        if (G.name, G.order) == ("Z2xZ2", 4):
            cocycle = pauli_cocycle()
        else:
            raise ValueError("a cocycle file is required for groups other than Z2xZ2")
    defect = twisted_delta_defect(G, cocycle)
    checks.append(_check("twisted grouplike comultiplication defect detected", tol,
                         defect >= 1.0, detail=f"defect {defect:.6f}"))
    if not cocycle.is_trivial():
        checks.append(_res("defect equals 2 for a sign cocycle", abs(defect - 2.0),
                           max(tol, 1e-9)))
    triv = twisted_delta_defect(G, trivial_cocycle(G))
    checks.append(_res("trivial cocycle gives no defect", triv, 1e-12))
    return checks


def _unit(n, i):
    E = np.zeros((n, n), dtype=complex)
    E[i, i] = 1.0
    return E


_SUITES = {
    "hopf-axioms": suite_hopf_axioms,
    "corep": suite_corep,
    "convolution": suite_convolution,
    "crossed-product": suite_crossed_product,
    "dual": suite_dual,
    "biduality": suite_biduality,
    "pentagon": suite_pentagon,
    "counterexample-twisted": suite_counterexample,
}


def run_suite_checks(suite: str, G: FiniteGroup, tol: float, seed: int,
                     cocycle: Cocycle | None = None) -> list[dict]:
    fn = _SUITES[suite]
    if suite == "counterexample-twisted":
        return fn(G, tol, seed, cocycle)
    return fn(G, tol, seed)
