"""Diagram construction, curve tracing, admissibility, relator extraction."""

import random

import pytest

from dunwoody import (
    Arc,
    ArcKind,
    Diagram,
    DunwoodyParams,
    FreeWord,
    InadmissibleDiagramError,
    ParameterError,
    StructuralError,
    UPPER,
    VertexId,
    build_diagram,
    check_admissibility,
    closed_form_word,
    cyclically_equal,
    derive_s,
    exponent_profile,
    family_params,
    heegaard_presentation,
    is_cyclic_presentation,
    parse_word,
    relator_word,
    shift_word,
    trace_curves,
    validate_params,
)


def W(text: str) -> FreeWord:
    return parse_word(text)


# ---------------------------------------------------------------------------
# Parameter validation.
# ---------------------------------------------------------------------------


def test_validate_params_computes_d_and_normalizes():
    params = validate_params(1, 0, 1, 1, 2, 0)
    assert params.d == 3
    assert params.as_tuple() == (1, 0, 1, 1, 2, 0)


def test_validate_params_reduces_r_mod_d_and_s_mod_n():
    assert validate_params(1, 0, 1, 1, 5, 0).r == 2
    assert validate_params(1, 0, 1, 2, -1, 3).s == 1
    assert validate_params(1, 0, 1, 2, -1, 3).r == 2


def test_validate_params_distinct_diagnostics():
    with pytest.raises(ParameterError, match="n must be positive"):
        validate_params(1, 1, 1, 0, 0, 0)
    with pytest.raises(ParameterError, match="a must be nonnegative"):
        validate_params(-1, 1, 1, 1, 0, 0)
    with pytest.raises(ParameterError, match="b must be nonnegative"):
        validate_params(1, -1, 1, 1, 0, 0)
    with pytest.raises(ParameterError, match="c must be nonnegative"):
        validate_params(1, 1, -1, 1, 0, 0)
    with pytest.raises(ParameterError, match=r"a\+b\+c must be positive"):
        validate_params(0, 0, 0, 1, 0, 0)


def test_family_params_plus_examples():
    assert family_params(3, 1, 1, 5).as_tuple() == (1, 1, 2, 5, 3, 3)
    assert family_params(2, 1, 1, 1).as_tuple() == (1, 0, 1, 1, 2, 0)


def test_family_params_minus_example():
    # a=1, b=p-2=1, c=2mp-2m-p-1=4, d=7; r = -3p+4 = -5 = 2 mod 7; s = -p = 1 mod 4.
    assert family_params(3, 2, -1, 4).as_tuple() == (1, 1, 4, 4, 2, 1)


def test_family_params_rejects_bad_input():
    with pytest.raises(ParameterError, match="p must be greater than 1"):
        family_params(1, 1, 1, 2)
    with pytest.raises(ParameterError, match="m must be positive"):
        family_params(2, 0, 1, 2)
    with pytest.raises(ParameterError, match="m must be greater than 1 for sign -"):
        family_params(2, 1, -1, 2)
    with pytest.raises(ParameterError, match="sign must be \\+1 or -1"):
        family_params(2, 1, 2, 2)
    with pytest.raises(ParameterError, match="n must be positive"):
        family_params(2, 1, 1, 0)


def test_params_str_and_d():
    params = DunwoodyParams(1, 1, 2, 5, 3, 3)
    assert params.d == 5
    assert str(params) == "D(1,1,2,5,3,3)"


# ---------------------------------------------------------------------------
# Construction counting.
# ---------------------------------------------------------------------------


def test_build_diagram_smallest_family_instance():
    diagram = build_diagram(validate_params(1, 0, 1, 1, 2, 0))
    assert len(diagram.arcs) == 3
    kinds = sorted(arc.kind for arc in diagram.arcs)
    assert kinds == [ArcKind.LOWER_BELT, ArcKind.UPPER_BELT, ArcKind.VERTICAL]
    assert len(list(diagram.vertices())) == 6


def test_build_diagram_five_vertex_cycles():
    diagram = build_diagram(validate_params(1, 1, 2, 1, 3, 0))
    assert len(diagram.arcs) == 5
    assert len(list(diagram.vertices())) == 10


def test_counting_invariants_over_parameter_grid():
    for a in range(5):
        for b in range(5):
            for c in range(5):
                if a + b + c == 0:
                    continue
                for n in range(1, 6):
                    params = validate_params(a, b, c, n, 1, 1)
                    diagram = build_diagram(params)
                    d = params.d
                    assert len(diagram.arcs) == n * d
                    assert len(list(diagram.vertices())) == 2 * n * d
                    # Every vertex meets exactly one arc end.
                    for vertex in diagram.vertices():
                        diagram.arc_at(vertex)


def test_bundle_counts_per_cycle_index():
    params = validate_params(2, 3, 1, 4, 0, 0)
    diagram = build_diagram(params)
    by_kind = {}
    for arc in diagram.arcs:
        by_kind[arc.kind] = by_kind.get(arc.kind, 0) + 1
    assert by_kind[ArcKind.UPPER_BELT] == 2 * 4
    assert by_kind[ArcKind.LOWER_BELT] == 2 * 4
    assert by_kind[ArcKind.DIAGONAL] == 3 * 4
    assert by_kind[ArcKind.VERTICAL] == 1 * 4


def test_rotation_equivariance():
    for params in (
        validate_params(1, 2, 1, 3, 2, 1),
        family_params(2, 1, 1, 4),
        family_params(3, 2, -1, 5),
    ):
        diagram = build_diagram(params)
        for k in range(params.n):
            assert set(diagram.rotated(k).arcs) == set(diagram.arcs)


def test_partner_is_an_involution():
    diagram = build_diagram(family_params(3, 1, 1, 4))
    for vertex in diagram.vertices():
        assert diagram.partner(diagram.partner(vertex)) == vertex


# ---------------------------------------------------------------------------
# Curve tracing.
# ---------------------------------------------------------------------------


def test_trace_single_curve_of_length_three():
    curves = trace_curves(build_diagram(family_params(2, 1, 1, 1)))
    assert len(curves) == 1
    assert curves[0].length == 3


def test_trace_three_curves_at_n_three():
    diagram = build_diagram(family_params(3, 1, 1, 3))
    curves = trace_curves(diagram)
    assert len(curves) == 3


def test_trace_single_vertical_arc():
    curves = trace_curves(build_diagram(validate_params(0, 0, 1, 1, 0, 0)))
    assert len(curves) == 1
    assert curves[0].length == 1


def test_trace_partitions_arcs():
    for params in (
        family_params(2, 1, 1, 3),
        family_params(3, 2, -1, 4),
        validate_params(2, 1, 3, 2, 5, 1),
    ):
        diagram = build_diagram(params)
        curves = trace_curves(diagram)
        seen = []
        for curve in curves:
            assert len(curve.arc_set) == curve.length  # no arc twice in one curve
            seen.extend(curve.arc_set)
        assert len(seen) == len(diagram.arcs)
        assert set(seen) == set(diagram.arcs)
        assert sum(curve.length for curve in curves) == params.n * params.d


def test_reversed_curve_inverts_crossing_word():
    for params in (family_params(2, 1, 1, 2), family_params(3, 1, 1, 3)):
        for curve in trace_curves(build_diagram(params)):
            forward = curve.crossing_word()
            backward = curve.reversed().crossing_word()
            assert cyclically_equal(backward, ~forward)


def test_corrupted_diagram_reports_structural_fault():
    diagram = build_diagram(family_params(2, 1, 1, 1))
    broken = Diagram(diagram.params, diagram.arcs[:-1])  # drop one arc
    with pytest.raises(StructuralError):
        trace_curves(broken)


def test_doubled_arc_reports_structural_fault():
    diagram = build_diagram(family_params(2, 1, 1, 1))
    extra = Arc(ArcKind.VERTICAL, VertexId(UPPER, 0, 1), VertexId(UPPER, 0, 2), 9)
    broken = Diagram(diagram.params, diagram.arcs + (extra,))
    with pytest.raises(StructuralError):
        trace_curves(broken)


# ---------------------------------------------------------------------------
# Admissibility.
# ---------------------------------------------------------------------------


def test_family_diagrams_admissible_at_n_one():
    for p in range(2, 7):
        for m in range(1, 4):
            report = check_admissibility(build_diagram(family_params(p, m, 1, 1)))
            assert report.admissible
            assert report.curve_count == 1


def test_family_diagram_admissible_at_n_four():
    report = check_admissibility(build_diagram(family_params(2, 1, 1, 4)))
    assert report.curve_count == 4
    assert report.orbit_transitive
    assert report.admissible


def test_admissibility_flag_matches_definition():
    report = check_admissibility(build_diagram(validate_params(1, 0, 0, 1, 0, 0)))
    assert report.admissible == (report.curve_count == 1 and report.orbit_transitive)


def test_inadmissible_diagram_detected():
    # r=0 identifies every vertex with the mirror of its own position; the
    # single vertical bundle then closes into more curves than cycles.
    found_inadmissible = False
    for r in range(3):
        report = check_admissibility(build_diagram(validate_params(1, 0, 1, 1, r, 0)))
        if not report.admissible:
            found_inadmissible = True
    assert found_inadmissible


# ---------------------------------------------------------------------------
# Relator words at n = 1.
# ---------------------------------------------------------------------------


def test_relator_word_spot_checks():
    expected = {
        (2, 1, 1): "a^2 G A G",
        (3, 1, 1): "a^3 G A G A G",
        (2, 2, -1): "a G A^2 G",
    }
    for (p, m, sign), text in expected.items():
        word = relator_word(build_diagram(family_params(p, m, sign, 1)))
        assert cyclically_equal(word, W(text), include_inversion=True)


def test_relator_word_matches_closed_form_exactly_on_calibration_grid():
    for p in range(2, 9):
        for m in range(1, 6):
            word = relator_word(build_diagram(family_params(p, m, 1, 1)))
            assert word == closed_form_word(p, m, 1)
        for m in range(2, 6):
            word = relator_word(build_diagram(family_params(p, m, -1, 1)))
            assert word == closed_form_word(p, m, -1)


def test_relator_word_requires_n_one():
    with pytest.raises(ValueError):
        relator_word(build_diagram(family_params(2, 1, 1, 2)))


def test_relator_word_requires_admissible_diagram():
    diagram = build_diagram(validate_params(1, 0, 1, 1, 0, 0))
    if not check_admissibility(diagram).admissible:
        with pytest.raises(InadmissibleDiagramError):
            relator_word(diagram)


# ---------------------------------------------------------------------------
# Heegaard presentations.
# ---------------------------------------------------------------------------


def test_heegaard_presentation_two_fold_is_shift_cyclic():
    pres = heegaard_presentation(build_diagram(family_params(2, 1, 1, 2)))
    assert pres.generator_count == 2
    assert len(pres.relators) == 2
    base = is_cyclic_presentation(pres)
    assert base is not None
    assert cyclically_equal(pres.relators[1], shift_word(base, 1, 2))


def test_heegaard_presentation_relator_count_equals_n():
    for params in (
        family_params(2, 1, 1, 5),
        family_params(3, 2, -1, 4),
        family_params(4, 1, 1, 3),
    ):
        pres = heegaard_presentation(build_diagram(params))
        assert pres.generator_count == params.n
        assert len(pres.relators) == params.n


def test_heegaard_presentation_cyclic_across_family_grid():
    # The n relators are exactly the n shift images of the base word, one
    # each; which image lands at which curve index depends on the gluing.
    for p in (2, 3, 4):
        for n in range(2, 6):
            pres = heegaard_presentation(build_diagram(family_params(p, 1, 1, n)))
            base = is_cyclic_presentation(pres)
            assert base is not None
            assert pres.relators[0] == base
            shifts = sorted(shift_word(base, k, n).letters for k in range(n))
            assert sorted(rel.letters for rel in pres.relators) == shifts


def test_heegaard_presentation_rejects_inadmissible():
    diagram = build_diagram(validate_params(1, 0, 1, 1, 0, 0))
    if not check_admissibility(diagram).admissible:
        with pytest.raises(InadmissibleDiagramError):
            heegaard_presentation(diagram)


# ---------------------------------------------------------------------------
# Exponent profiles and the shift parameter.
# ---------------------------------------------------------------------------


def test_exponent_profile_of_family_words():
    for p in range(2, 9):
        for m in range(1, 4):
            word = relator_word(build_diagram(family_params(p, m, 1, 1)))
            assert exponent_profile(word) == (-1, p)
        for m in range(2, 4):
            word = relator_word(build_diagram(family_params(p, m, -1, 1)))
            assert exponent_profile(word) == (1, p)


def test_exponent_profile_trivial_cases():
    assert exponent_profile(FreeWord.identity()) == (0, 0)
    assert exponent_profile(W("a^2 G")) == (-2, 1)


def test_exponent_profile_invariances():
    rng = random.Random(31)
    for _ in range(100):
        letters = [(rng.randrange(0, 2), rng.choice((1, -1))) for _ in range(rng.randrange(1, 20))]
        w = FreeWord(letters)
        if not w:
            continue
        profile = exponent_profile(w)
        # Cyclic rotation and conjugation preserve exponent sums.
        rotated = FreeWord(w.letters[1:] + w.letters[:1])
        assert exponent_profile(rotated) == profile
        conjugator = FreeWord([(rng.randrange(0, 2), rng.choice((1, -1)))])
        assert exponent_profile(conjugator * w * ~conjugator) == profile
        assert exponent_profile(~w) == (-profile[0], -profile[1])


def test_derive_s_universal_solutions():
    for p in range(2, 9):
        plus = derive_s((-1, p), 7)
        assert plus.universal == p
        minus = derive_s((1, p), 7)
        assert minus.universal == -p
        for n in range(1, 13):
            assert p % n in derive_s((-1, p), n)
            assert -p % n in derive_s((1, p), n)


def test_derive_s_empty_when_congruence_unsolvable():
    solutions = derive_s((2, 1), 2)
    assert solutions.solutions == frozenset()
    assert solutions.universal is None


def test_derive_s_matches_family_parameter():
    for p in range(2, 7):
        for n in range(1, 13):
            word = relator_word(build_diagram(family_params(p, 1, 1, 1)))
            params = family_params(p, 1, 1, n)
            assert params.s in derive_s(exponent_profile(word), n)
        for n in range(1, 13):
            word = relator_word(build_diagram(family_params(p, 2, -1, 1)))
            params = family_params(p, 2, -1, n)
            assert params.s in derive_s(exponent_profile(word), n)


# ---------------------------------------------------------------------------
# Random structural fuzz.
# ---------------------------------------------------------------------------


def test_structural_invariants_hold_on_random_parameters():
    rng = random.Random(60913)
    checked = 0
    while checked < 500:
        a, b, c = rng.randrange(0, 5), rng.randrange(0, 5), rng.randrange(0, 5)
        if a + b + c == 0:
            continue
        n = rng.randrange(1, 7)
        params = validate_params(a, b, c, n, rng.randrange(-20, 20), rng.randrange(-10, 10))
        diagram = build_diagram(params)
        curves = trace_curves(diagram)
        assert sum(curve.length for curve in curves) == params.n * params.d
        arcs = [arc for curve in curves for arc in curve.arc_set]
        assert len(arcs) == len(set(arcs)) == len(diagram.arcs)
        checked += 1
