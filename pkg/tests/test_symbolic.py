from __future__ import annotations

import itertools

import numpy as np
import pytest

from clifford_workbench.algebra.multivector import AlgebraSignature, Multivector
from clifford_workbench.basis.monomials import MultiIndex, symmetric_power, zeta
from clifford_workbench.config.conventions import SignConvention
from clifford_workbench.mass.terms import MassTerm
from clifford_workbench.mass.transform import from_monogenic
from clifford_workbench.operators.field import CliffordField
from clifford_workbench.operators.symbolic import (
    evaluate_symbolic,
    factorization_defects,
    is_identically_zero,
    symbolic_apply_D,
    symbolic_apply_D_conj,
    symbolic_apply_perturbed,
    symbolic_laplacian,
    symbolic_residual,
)

SIG = AlgebraSignature(2)


def _integer(values) -> Multivector:
    return Multivector(SIG, np.array(values, dtype=object))


def _zeta_field(j: int, convention: SignConvention) -> CliffordField:
    return CliffordField(evaluator=lambda p: zeta(j, p, SIG, convention), signature=SIG, label=f"zeta{j}")


@pytest.mark.parametrize("convention", list(SignConvention))
def test_zeta_is_monogenic(convention):
    for j in (1, 2):
        assert is_identically_zero(symbolic_apply_D(_zeta_field(j, convention), convention))


@pytest.mark.parametrize("convention", list(SignConvention))
@pytest.mark.parametrize("beta", [(2, 0), (1, 1), (2, 1), (0, 3)])
def test_symmetric_powers_are_monogenic(convention, beta):
    beta = MultiIndex(beta)
    f = CliffordField(
        evaluator=lambda p: symmetric_power(p, beta, SIG, convention),
        signature=SIG,
        label=f"V{beta.label}",
    )
    assert symbolic_residual(symbolic_apply_D(f, convention)) == 0.0


def test_wrong_convention_leaves_a_residual():
    f = _zeta_field(1, SignConvention.LEDGER)
    residual = symbolic_apply_D(f, SignConvention.PRINTED)
    assert not is_identically_zero(residual)
    assert symbolic_residual(residual) == 2.0


def test_conjugate_operator_on_zeta():
    f = _zeta_field(1, SignConvention.LEDGER)
    # conj(D) zeta_1 = e_1 - sigma e_1 * s = 2 e_1 with sigma = 1, s = -1
    value = symbolic_apply_D_conj(f, SignConvention.LEDGER)
    assert is_identically_zero(value - _integer([0, 2, 0, 0]))


@pytest.mark.parametrize("convention", list(SignConvention))
def test_factorization_is_exact(convention):
    c = _integer([1, 1, 0, 2])
    for alpha in itertools.product(range(3), repeat=3):
        if sum(alpha) > 3:
            continue
        f = CliffordField.polynomial({alpha: c}, label=f"y^{alpha}")
        first, second = factorization_defects(f, convention)
        assert is_identically_zero(first)
        assert is_identically_zero(second)


def test_laplacian_of_a_harmonic_polynomial():
    one = _integer([1, 0, 0, 0])
    f = CliffordField.polynomial({(2, 0, 0): one, (0, 2, 0): -one, (0, 0, 1): one})
    assert is_identically_zero(symbolic_laplacian(f))
    g = CliffordField.polynomial({(1, 1, 1): one * 4})
    assert symbolic_residual(evaluate_symbolic(g)) == 4.0


@pytest.mark.parametrize("convention", list(SignConvention))
def test_perturbed_operator_on_an_exponential(convention):
    mass = MassTerm.right_scalar(1.0)
    f = from_monogenic(CliffordField.constant(_integer([1, 0, 0, 0])), mass, convention)
    assert symbolic_residual(symbolic_apply_perturbed(f, mass, convention)) <= 1e-12


def test_perturbed_operator_with_a_clifford_mass():
    mass = MassTerm.right_clifford(Multivector.generator(SIG, 1))
    # f = zeta_2 is monogenic, so the residual is f * e1 itself
    f = _zeta_field(2, SignConvention.LEDGER)
    residual = symbolic_apply_perturbed(f, mass, SignConvention.LEDGER)
    assert not is_identically_zero(residual)
    assert symbolic_residual(residual) == 1.0
