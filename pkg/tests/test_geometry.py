from fractions import Fraction

import pytest

from autcone.geometry import (
    center_rank_ok,
    cone_vertex_space,
    hyperplane_section,
    pluecker_center,
    pluecker_rank,
    project,
    restrict_piece,
    section_inequality_check,
    segre_center,
    segre_rank,
)
from autcone.ideal import GradedPiece, forms_vanishing
from autcone.lie import aut_cone, prolongation, tangency_check
from autcone.linalg import solve_homogeneous
from autcone.poly import MonomialBasis, Polynomial, sparse_coefficients
from autcone.varieties import cone_over, pluecker, quadric, quadric_form, segre, sympl_vmrt, veronese


def linear_form_in_ideal(piece: GradedPiece) -> bool:
    """Is there l != 0 with l * x_i in the quadric piece for every i?"""
    n = piece.ambient_dim
    mb = MonomialBasis(n, 2)
    red = piece.reducer

    def rows():
        for i in range(n):
            acc: dict[int, dict[int, Fraction]] = {}
            for k in range(n):
                prod = Polynomial.variable(n, k) * Polynomial.variable(n, i)
                for mu, c in red.reduce(sparse_coefficients(prod, mb)).items():
                    acc.setdefault(mu, {})[k] = c
            yield from acc.values()

    return bool(solve_homogeneous(rows(), n))


def pair(pieces):
    g = aut_cone(pieces)
    return g.dim, prolongation(g, 1).dim


@pytest.mark.parametrize(
    "p, expected",
    [(segre(2, 3), 0), (cone_over(segre(2, 2), 1), 1), (cone_over(veronese(2, 2), 2), 2), (cone_over(segre(2, 3), 3), 3)],
    ids=lambda x: getattr(x, "label", str(x)),
)
def test_vertex_dims(p, expected):
    assert len(cone_vertex_space([forms_vanishing(p, 2)])) == expected


def test_vertex_space_is_the_planted_coordinates():
    space = cone_vertex_space([forms_vanishing(cone_over(veronese(2, 2), 2), 2)])
    assert space == [(0, 0, 0, 1, 0), (0, 0, 0, 0, 1)]


def test_vertex_space_uses_lower_degree_pieces():
    p = cone_over(segre(2, 2), 1)
    assert len(cone_vertex_space([forms_vanishing(p, 2), forms_vanishing(p, 3)])) == 1


def test_restriction_of_quadric_by_coordinate_hyperplane():
    piece = restrict_piece(quadric(5), [0, 0, 0, 0, 1])
    # x0 x4 + x1 x3 + x2^2 with x4 = 0 leaves x1 x3 + x2^2: a cone over a conic
    assert piece.dim == 1
    assert len(cone_vertex_space([piece])) == 1
    assert GradedPiece.from_polynomials(4, 2, [quadric_form(4)]).dim == 1


@pytest.mark.parametrize("seed", range(3))
def test_seeded_sections(seed):
    i2 = forms_vanishing(pluecker(2, 5), 2)
    one = hyperplane_section([i2], seed=seed)
    two = hyperplane_section([i2], seed=seed, codim=2)
    assert pair(one.pieces) == (16, 5)
    assert pair(two.pieces) == (9, 1)
    s = hyperplane_section(segre(2, 3), seed=seed)
    assert pair(s.pieces) == pair([forms_vanishing(sympl_vmrt(2, 1), 2)]) == (7, 3)
    for sec in (one, two, s):
        assert not linear_form_in_ideal(sec.pieces[0])
        assert not cone_vertex_space(sec.pieces)


def test_section_is_deterministic_in_seed():
    i2 = forms_vanishing(pluecker(2, 5), 2)
    a = hyperplane_section([i2], seed=7, codim=2)
    b = hyperplane_section([i2], seed=7, codim=2)
    assert a.forms == b.forms and a.pieces == b.pieces


def test_section_argument_errors():
    with pytest.raises(ValueError):
        hyperplane_section(segre(2, 3))
    with pytest.raises(ValueError):
        hyperplane_section(segre(2, 3), h=[0] * 6)


def test_project_from_empty_center_is_identity():
    p = segre(2, 3)
    assert project(p, []).components == p.components


def test_projection_of_segre_4_4_from_rank_three_point():
    center = [segre_center(4, 4, 3)]
    assert segre_rank(center[0], 4, 4) == 3 and center_rank_ok("segre", (4, 4), center)
    q = project(segre(4, 4), center)
    assert q.ambient_dim == 15
    g = aut_cone([forms_vanishing(q, 2)])
    assert prolongation(g, 1).dim == 1
    assert tangency_check(g, q)


def test_projection_from_secant_point_is_flagged():
    center = [segre_center(2, 2, 2)]
    assert not center_rank_ok("segre", (2, 2), center)
    assert forms_vanishing(project(segre(2, 2), center), 2).dim == 0


def test_pluecker_center_rank():
    v = pluecker_center(6, 6)
    assert pluecker_rank(v, 6) == 6
    assert center_rank_ok("pluecker", (2, 6), [v])
    assert not center_rank_ok("pluecker", (2, 6), [pluecker_center(6, 4)])


@pytest.mark.parametrize(
    "source, lhs, rhs",
    [(segre(2, 3), 11, 6), (quadric(6), 15, 10), (pluecker(2, 5), 24, 15)],
    ids=["segre(2,3)", "quadric(6)", "pluecker(2,5)"],
)
def test_section_inequality(source, lhs, rhs):
    res = section_inequality_check(source, seed=1)
    assert (res.dim_g, res.dim_g_section) == (lhs, rhs)
    assert res.holds and res.equality
    assert res.to_obj()["rhs"] == rhs + res.n


def test_section_inequality_rejects_cones():
    with pytest.raises(ValueError):
        section_inequality_check(cone_over(segre(2, 2), 1))


def test_projected_grassmannian_needs_cubics():
    # no quadric survives projection from a rank-6 point; the cubic piece still
    # pins down aut = sp(6) + scalars
    q = project(pluecker(2, 6), [pluecker_center(6, 6)])
    assert forms_vanishing(q, 2).dim == 0
    g = aut_cone([forms_vanishing(q, 3)])
    assert g.dim == 21 + 1
    assert tangency_check(g, q)
