"""
Unit tests for Cartan data, root systems and weights.
"""

import json
from fractions import Fraction

import pytest

from core import rootdata
from core.errors import ArityMismatch, IndexOutOfRange, MalformedCartanMatrix, NonFiniteType, ParseError
from core.rootdata import (
    CartanDatum,
    Weight,
    build_root_system,
    dual_positive_roots,
    expected_positive_root_count,
    parse_cartan_datum,
    parse_weight,
    standard_cartan_matrix,
    system_from_spec,
)


def _raise_permission_error(*args, **kwargs):
    raise PermissionError("denied")


class TestCartanDatum:
    """Test cases for Cartan matrix construction and validation."""

    def test_standard_a3_matrix(self):
        """Test the A3 matrix is the tridiagonal chain."""
        assert standard_cartan_matrix("A", 3) == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))

    def test_b2_and_c2_are_transposes(self):
        """Test B2 and C2 differ by transposition."""
        b2 = CartanDatum.from_series("B", 2)
        c2 = CartanDatum.from_series("C", 2)
        assert b2.transposed() == c2.cartan_matrix
        assert b2.cartan_matrix == ((2, -1), (-2, 2))

    def test_d4_branch_node(self):
        """Test node 4 of D4 attaches to node 2."""
        matrix = standard_cartan_matrix("D", 4)
        assert matrix[1][3] == matrix[3][1] == -1
        assert matrix[2][3] == 0

    @pytest.mark.parametrize("series,rank", [("B", 1), ("C", 1), ("D", 2), ("E", 6)])
    def test_rank_and_series_limits(self, series, rank):
        """Test unsupported classical series or ranks are rejected."""
        with pytest.raises(MalformedCartanMatrix):
            standard_cartan_matrix(series, rank)

    @pytest.mark.parametrize(
        "matrix",
        [
            [[2, 1], [-1, 2]],       # positive off-diagonal
            [[1, -1], [-1, 2]],      # diagonal not 2
            [[2, -1], [0, 2]],       # zero pattern not symmetric
            [[2, -1, 0], [-1, 2]],   # ragged
            [[2, -1.5], [-1, 2]],    # non-integer
            [[2, Fraction(-1, 2)], [-1, 2]],
            [[True, -1], [-1, 2]],
        ],
    )
    def test_malformed_matrices(self, matrix):
        """Test matrices violating the Cartan axioms are rejected."""
        with pytest.raises(MalformedCartanMatrix):
            CartanDatum.from_matrix(matrix)

    def test_integer_valued_fraction_entries(self):
        """Test integral Fraction entries are accepted as integers."""
        datum = CartanDatum.from_matrix([[Fraction(2), Fraction(-1)], [-1, 2]])
        assert datum.cartan_matrix == ((2, -1), (-1, 2))

    def test_custom_label_is_compact_json(self):
        """Test a custom datum labels itself by its matrix."""
        datum = CartanDatum.from_matrix([[2, -3], [-1, 2]])
        assert datum.series == "custom"
        assert datum.label == "[[2,-3],[-1,2]]"


class TestParseCartanDatum:
    """Test cases for system spec parsing."""

    def test_series_text_is_case_insensitive(self):
        """Test "b3" and "B3" parse to the same datum."""
        assert parse_cartan_datum("b3") == parse_cartan_datum("B3")
        assert parse_cartan_datum(" A2 ").label == "A2"

    def test_rank_zero_is_parse_error(self):
        """Test "A0" is rejected as a parse error."""
        with pytest.raises(ParseError):
            parse_cartan_datum("A0")

    def test_too_small_classical_rank_is_parse_error(self):
        """Test "D2" is rejected as a parse error."""
        with pytest.raises(ParseError):
            parse_cartan_datum("D2")

    def test_json_object(self):
        """Test an inline JSON object with a cartan_matrix."""
        datum = parse_cartan_datum('{"cartan_matrix": [[2, -1], [-1, 2]]}')
        assert datum.series == "custom"
        assert datum.rank == 2

    def test_json_file(self, temp_dir):
        """Test a path to a JSON file holding the matrix."""
        path = temp_dir / "g2.json"
        path.write_text(json.dumps({"cartan_matrix": [[2, -1], [-3, 2]]}))
        datum = parse_cartan_datum(str(path))
        assert datum.cartan_matrix == ((2, -1), (-3, 2))

    def test_undecodable_file(self, temp_dir):
        """Test a file that is not UTF-8 raises ParseError."""
        path = temp_dir / "bad.json"
        path.write_bytes(b'{"cartan_matrix": [[2, \xff]]}')
        with pytest.raises(ParseError):
            parse_cartan_datum(str(path))

    def test_unreadable_path(self, monkeypatch, temp_dir):
        """Test an OSError while reading becomes ParseError."""
        path = temp_dir / "locked.json"
        path.write_text("{}")
        monkeypatch.setattr(rootdata.Path, "read_text", _raise_permission_error)
        with pytest.raises(ParseError):
            parse_cartan_datum(str(path))

    @pytest.mark.parametrize("text", ["", "G", "X3", '{"matrix": [[2]]}', '{"cartan_matrix": [[2.5]]}', "{broken"])
    def test_unrecognized_specs(self, text):
        """Test garbage specs raise ParseError."""
        with pytest.raises(ParseError):
            parse_cartan_datum(text)


class TestRootSystem:
    """Test cases for positive-root closure and coroots."""

    @pytest.mark.parametrize(
        "series,rank",
        [("A", n) for n in range(1, 7)]
        + [(s, n) for s in "BC" for n in range(2, 7)]
        + [("D", n) for n in range(3, 7)],
    )
    def test_positive_root_counts(self, series, rank):
        """Test |positive roots| matches the classical formulas."""
        system = build_root_system(CartanDatum.from_series(series, rank))
        assert system.num_positive == expected_positive_root_count(series, rank)

    def test_b2_roots_and_coroots(self, b2):
        """Test the B2 roots and their coroots in the dual basis."""
        assert b2.positive_roots == ((1, 0), (0, 1), (1, 1), (1, 2))
        coroots = dict(zip(b2.positive_roots, b2.positive_coroots))
        assert coroots[(1, 1)] == (2, 1)
        assert coroots[(1, 2)] == (1, 1)

    def test_coroots_form_the_dual_system(self, b2):
        """Test coroots coincide with the roots of the transposed matrix."""
        assert sorted(b2.positive_coroots) == sorted(dual_positive_roots(b2.datum))

    def test_simple_roots_come_first(self, a3):
        """Test the first rank roots are the simple roots."""
        assert a3.simple_roots == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_highest_root(self, a3, b2):
        """Test the highest root of A3 and B2."""
        assert a3.highest_root() == (1, 1, 1)
        assert b2.highest_root() == (1, 2)

    def test_g2_custom_matrix(self):
        """Test a custom G2 matrix closes to six positive roots."""
        system = system_from_spec('{"cartan_matrix": [[2, -1], [-3, 2]]}')
        assert system.num_positive == 6
        assert not system.is_simply_laced()

    def test_simply_laced(self, a3, b2):
        """Test simply-laced detection."""
        assert a3.is_simply_laced()
        assert not b2.is_simply_laced()

    def test_affine_matrix_is_not_finite(self):
        """Test the affine A1 matrix exhausts the root bound."""
        datum = CartanDatum.from_matrix([[2, -2], [-2, 2]])
        with pytest.raises(NonFiniteType):
            build_root_system(datum, max_roots=50)

    def test_reflection_tables_are_involutions(self, a3, b2):
        """Test applying a simple reflection twice is the identity."""
        for system in (a3, b2):
            for table in system.reflection_tables:
                for k, image in enumerate(table):
                    back = table[abs(image) - 1]
                    assert (back if image > 0 else -back) == k + 1

    def test_reflect(self, a2):
        """Test s_1 sends alpha_2 to alpha_1 + alpha_2."""
        assert a2.reflect((0, 1), 0) == (1, 1)
        with pytest.raises(IndexOutOfRange):
            a2.reflect((0, 1), 2)

    def test_dim_flag(self, a3):
        """Test dim X = 2N."""
        assert a3.dim_flag == 12


class TestWeights:
    """Test cases for weight arithmetic and predicates."""

    def test_parse_rational_weight(self):
        """Test integer and fractional coordinates."""
        weight = parse_weight("1, -1/2")
        assert weight.coords == (Fraction(1), Fraction(-1, 2))
        assert str(weight) == "(1, -1/2)"

    def test_parse_malformed_weight(self):
        """Test non-numeric coordinates raise ParseError."""
        with pytest.raises(ParseError):
            parse_weight("1,x")

    def test_arithmetic(self):
        """Test negation, addition and subtraction."""
        a = Weight.of(1, 2)
        b = Weight.of("1/2", -1)
        assert -a == Weight.of(-1, -2)
        assert a + b == Weight.of("3/2", 1)
        assert a - b == Weight.of("1/2", 3)
        with pytest.raises(ArityMismatch):
            a + Weight.of(1)

    @pytest.mark.parametrize("series,rank", [("A", 2), ("A", 4), ("B", 2), ("C", 3), ("D", 4)])
    def test_rho_predicates(self, series, rank):
        """Test -rho, rho and zero against the three predicates."""
        system = build_root_system(CartanDatum.from_series(series, rank))
        rho = system.rho()
        minus_rho = -rho
        zero = Weight(tuple(Fraction(0) for _ in range(rank)))

        assert system.is_integral(minus_rho)
        assert system.is_regular(minus_rho)
        assert system.is_antidominant(minus_rho)
        assert not system.is_antidominant(rho)
        assert system.is_antidominant(zero)
        assert not system.is_regular(zero)

    def test_half_integral_weight_is_antidominant(self, a2):
        """Test non-integral positive values do not break antidominance."""
        weight = Weight.of("-1/2", "1/2")
        assert not a2.is_integral(weight)
        assert a2.is_antidominant(weight)

    def test_coroot_value(self, b2):
        """Test values on the non-simple B2 coroots."""
        weight = Weight.of(1, 1)
        values = dict(zip(b2.positive_roots, b2.coroot_values(weight)))
        assert values[(1, 1)] == 3
        assert values[(1, 2)] == 2

    def test_coroot_value_errors(self, a2):
        """Test arity and index errors."""
        with pytest.raises(ArityMismatch):
            a2.coroot_value(Weight.of(1, 2, 3), 0)
        with pytest.raises(IndexOutOfRange):
            a2.coroot_value(Weight.of(1, 2), 3)

    @pytest.mark.parametrize("series,rank", [("A", 2), ("A", 3), ("B", 2), ("C", 3), ("D", 4)])
    @pytest.mark.parametrize("coords", [(1, -2), ("1/2", 3), (0, "-1/3"), ("5/2", "5/2")])
    def test_integrality_survives_negation_and_shift(self, series, rank, coords):
        """Test is_integral is unchanged by negation and by the rho shift."""
        system = build_root_system(CartanDatum.from_series(series, rank))
        weight = Weight.of(*(coords + (1,) * (rank - len(coords))))
        integral = system.is_integral(weight)
        assert system.is_integral(-weight) == integral
        assert system.is_integral(system.shift_to_d_module_parameter(weight)) == integral

    def test_shift_to_d_module_parameter(self, a2):
        """Test lambda = mu - rho."""
        assert a2.shift_to_d_module_parameter(Weight.of(0, 0)) == Weight.of(-1, -1)
