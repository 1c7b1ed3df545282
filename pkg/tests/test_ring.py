import random

import pytest
from hypothesis import given, strategies as st

from artifact.algebra import Polynomial, parse, var
from artifact.ring import (
    RULES,
    MalformedClass,
    PoleObstruction,
    YProduct,
    delta,
    genus0_identities,
    genus0_reduce,
    hodge_ch,
    p_push,
    q_push_product,
    reduce,
    rewrite_randomly,
    verify_thm33,
    xi,
)
from artifact.verify import check_confluence, random_monomial

psi = var("ψ")


def test_normal_forms():
    assert reduce("Π^3").value == parse("Π*Ψ^2")
    assert reduce("Σ*Π").is_zero()
    assert reduce("Π*Δ").is_zero()
    assert reduce("Σ^2*Δ*N").value == parse("Ψ^2*Δ*N")
    # c1ω is eliminated
    assert reduce("c1ω").value == parse("Σ - Ψ - 2*Π")
    assert reduce("c1ω*Π").value == parse("-Ψ*Π + 2*Ψ*Π")


def test_components():
    x = reduce("Π*Ψ + Σ^2 + N*Δ*Ψ")
    assert x.p1 == parse("Ψ")
    assert x.p2 == parse("Σ^2")
    assert x.p3 == parse("N*Ψ")


def test_malformed():
    with pytest.raises(MalformedClass):
        reduce("N*Σ")


def test_c1_omega_annihilates_delta():
    assert (reduce("c1ω") * var("Δ")).is_zero()


@given(st.integers(0, 2**32))
def test_confluence_property(seed):
    rng = random.Random(seed)
    e = random_monomial(rng)
    mono = Polynomial({tuple(sorted((v, x) for v, x in e.items() if x)): 1})
    r = rewrite_randomly(e, rng)
    other = Polynomial() if r is None else r[0] * Polynomial({tuple(sorted(r[1].items())): 1})
    assert reduce(mono).value == other


def test_confluence_ten_thousand():
    assert check_confluence(10_000, seed=7)[0].status


@pytest.mark.parametrize("order", [2, 4, 6])
def test_chern_class_of_f(order):
    assert verify_thm33(order)["ok"]


@pytest.mark.parametrize("rule", ["SigmaPi", "SigmaDelta"])
def test_chern_identity_needs_relations(rule):
    assert not verify_thm33(4, disabled=[rule])["ok"]


def test_push_rules():
    assert p_push("Ψ^2*Π") == var("n") * psi ** 2
    assert p_push("Ψ*Σ^3") == psi * xi(2)
    assert p_push("N*Δ^2*Ψ") == psi * delta(1, 1)
    assert p_push("Ψ^4").is_zero()
    assert p_push("Σ", substitute_xi0=True, n=5, g=0) == Polynomial.const(8)


def test_push_is_linear():
    a, b = parse("Σ^2*Ψ + Π"), parse("N*Δ + 3*Σ")
    assert p_push(a + b) == p_push(a) + p_push(b)


def test_q_push_product():
    # q_*(f_*1) = p_*(1)·q_*(Ψ_Y+Π_Y) = 0 since p_*1 = 0; with h = Σ one gets ξ₀
    assert q_push_product(YProduct([reduce("Σ")])) == xi(0)
    two = q_push_product(YProduct([reduce("Σ"), reduce("Σ")]))
    assert two == psi * xi(0) ** 2
    with pytest.raises(PoleObstruction):
        q_push_product(YProduct([reduce("Ψ")]))


def test_genus0_relations():
    ids = genus0_identities()
    assert ids[0] == parse("-4*n*ψ + 4*ψ + δ_{0,0} + ξ_1")
    assert genus0_reduce(xi(1)) == parse("4*(n - 1)*ψ - δ_{0,0}")
    assert genus0_reduce(xi(0), 6) == Polynomial.const(10)


def test_hodge_rank():
    assert hodge_ch(0) == var("g") - 1
    # genus zero: the Hodge bundle is zero, so every ch_k vanishes after the ξ₁ relation
    assert genus0_reduce(hodge_ch(1).substitute({"g": 0})).is_zero()


def test_rules_listed():
    assert set(RULES) == {"PiPi", "SigmaPi", "PiDelta", "SigmaDelta"}
