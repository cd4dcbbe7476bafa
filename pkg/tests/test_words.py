"""Structural word algebra: construction, metrics, text, JSON, evaluation.

Bit-length and word-length values below are hand-computed from the
conventions documented in the words module docstring.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shortpres.errors import InternalInvariantViolation, UnboundSymbol
from shortpres.perm import Permutation, parse_cycles
from shortpres.words import (
    Comm,
    Conj,
    Factor,
    GeneratorImages,
    GroupWord,
    ProductPair,
    Slp,
    Sym,
    bit_length,
    comm,
    conj,
    evaluate,
    evaluate_slp,
    exponent_bits,
    least_absolute,
    parse_word,
    simplify,
    sym,
    to_text,
    word_from_json,
    word_length,
    word_to_json,
)

a, b, c = sym("a"), sym("b"), sym("c")


class TestConstruction:
    def test_mul_merges_adjacent_equal_bases(self):
        w = a * a
        assert w.factors == (Factor(Sym("a"), 2),)
        assert a ** 3 * a ** -1 == a ** 2

    def test_mul_cancels_to_empty(self):
        assert (a * ~a).is_empty()
        assert (a ** 2 * a ** -2).is_empty()

    def test_mul_does_not_merge_across_distinct_bases(self):
        w = a * b * a
        assert len(w.factors) == 3

    def test_pow_zero_is_empty(self):
        assert (a ** 0).is_empty()
        assert ((a * b) ** 0).is_empty()

    def test_pow_one_is_identity_operation(self):
        assert (a * b) ** 1 == a * b

    def test_pow_folds_single_factor(self):
        assert (a ** 2) ** 3 == a ** 6
        assert (a ** 2) ** -1 == a ** -2

    def test_pow_groups_multi_factor(self):
        w = (a * b) ** 3
        assert len(w.factors) == 1
        f = w.factors[0]
        assert isinstance(f.base, GroupWord) and f.exp == 3

    def test_invert_distributes_and_reverses(self):
        w = ~(a * b ** -2)
        assert w == b ** 2 * a ** -1
        assert (w * (a * b ** -2)).is_empty()

    def test_invert_differs_from_pow_minus_one(self):
        # ** -1 wraps a multi-factor word; ~ rewrites it letter by letter.
        w = a * b
        grouped = w ** -1
        assert len(grouped.factors) == 1 and grouped.factors[0].exp == -1
        assert ~w == b ** -1 * a ** -1

    def test_conj_and_comm_constructors(self):
        t = conj(a, b)
        assert isinstance(t.factors[0].base, Conj)
        k = comm(a, b)
        assert isinstance(k.factors[0].base, Comm)

    def test_zero_exponent_factor_rejected(self):
        with pytest.raises(InternalInvariantViolation):
            Factor(Sym("a"), 0)


class TestMetrics:
    def test_exponent_bits(self):
        assert exponent_bits(1) == 1
        assert exponent_bits(2) == 2
        assert exponent_bits(13) == 4
        assert exponent_bits(-1) == 2
        assert exponent_bits(-13) == 5

    def test_symbol_bit_length(self):
        assert bit_length(a) == 2  # basecost 1 + one bit for the exponent 1
        assert bit_length(a ** 13) == 5
        assert bit_length(a ** -5) == 1 + 3 + 1

    def test_conjugate_bit_length(self):
        # base bl(a)+bl(b)+2 = 6, exponent 1 costs 1 bit
        assert bit_length(conj(a, b)) == 7

    def test_commutator_bit_length(self):
        # base 2*2 + 2*2 + 4 = 12, exponent bit 1
        assert bit_length(comm(a, b)) == 13

    def test_grouped_bit_length(self):
        # (a b^-2)^3: inner 2 + 4 = 6, +2 for the parentheses, +2 for exp 3
        assert bit_length((a * b ** -2) ** 3) == 10

    def test_word_length_counts_expanded_letters(self):
        assert word_length(a ** 13) == 13
        assert word_length(comm(a, b)) == 4
        assert word_length((a * b ** -2) ** 3) == 9
        assert word_length(conj(a, b ** 2)) == 1 + 2 * 2

    def test_word_length_expands_definitions(self):
        defs = {"b": a ** 5, "c": sym("b") * sym("b")}
        assert word_length(sym("b"), defs) == 5
        assert word_length(sym("c") ** 2, defs) == 20


class TestSimplify:
    def test_least_absolute_range_and_tie(self):
        assert least_absolute(6, 11) == -5
        assert least_absolute(5, 11) == 5
        assert least_absolute(3, 6) == 3  # tie at m/2 goes positive
        assert least_absolute(-4, 6) == 2
        assert least_absolute(17, 11) == -5

    def test_reduces_symbol_exponent(self):
        assert simplify(a ** 6, {"a": 11}) == a ** -5
        assert simplify(a ** 6, {"a": 13}) == a ** 6

    def test_order_multiple_drops_factor(self):
        assert simplify(a ** 22, {"a": 11}).is_empty()

    def test_seam_remerges_after_reduction(self):
        # raw factors a^6 a^7 with order 13: the second reduces to a^-6
        w = GroupWord((Factor(Sym("a"), 6), Factor(Sym("a"), 7)))
        assert simplify(w, {"a": 13}).is_empty()

    def test_conjugate_inherits_target_order(self):
        w = conj(sym("z"), a) ** 7
        assert simplify(w, {"z": 3}) == conj(sym("z"), a)

    def test_recurses_into_subwords(self):
        w = (a ** 14 * b) ** 2
        got = simplify(w, {"a": 11})
        assert got == (a ** 3 * b) ** 2

    def test_unknown_orders_left_alone(self):
        w = a ** 100 * b ** -7
        assert simplify(w, {}) == w


class TestText:
    def test_basic_rendering(self):
        assert to_text(a ** 11 * b ** -5) == "a^11 b^-5"
        assert to_text(conj(a ** 5, b) * a ** -4) == "(a^5)^b a^-4"
        assert to_text((sym("z") * conj(sym("z"), a)) ** 2) == "(z z^a)^2"
        assert to_text(comm(a, conj(b, c))) == "[a,b^c]"
        assert to_text(GroupWord()) == "1"

    def test_conjugate_operands_parenthesized_when_compound(self):
        inner = conj(sym("z"), a ** 3)
        outer = conj(inner, conj(sym("z"), a ** 2) * conj(sym("z"), a))
        assert to_text(outer) == "(z^(a^3))^(z^(a^2) z^a)"

    @pytest.mark.parametrize(
        "text",
        [
            "a^11 b^-5",
            "(a^5)^b a^-4",
            "(z z^a)^2",
            "[d,e^y]",
            "y w^-1",
            "(z^(a^3))^(z^(a^2) z^a)",
            "(b^2 z^a z^(a^-1))^6",
            "a^2 (a x)^-2 a",
            "[a,b^c]^2 (a b)^-3",
            "1",
        ],
    )
    def test_parse_round_trip(self, text):
        w = parse_word(text)
        assert to_text(w) == text
        assert parse_word(to_text(w)) == w

    def test_parse_rejects_garbage(self):
        with pytest.raises(InternalInvariantViolation):
            parse_word("a^")
        with pytest.raises(InternalInvariantViolation):
            parse_word("(a")
        with pytest.raises(InternalInvariantViolation):
            parse_word("a )")


class TestSlp:
    def build(self):
        return Slp(
            generators=("a", "g"),
            definitions=(("b", sym("g") ** 3), ("z", sym("g") ** 5)),
            relators=(a ** 11 * sym("b") ** -5, (sym("z") * conj(sym("z"), a)) ** 2),
        )

    def test_unbound_symbol_rejected(self):
        with pytest.raises(UnboundSymbol):
            Slp(("a",), (), (sym("q"),))
        with pytest.raises(UnboundSymbol):
            Slp(("a",), (("b", sym("q") ** 2),), ())

    def test_definition_order_enforced(self):
        # d references e, which is defined later
        with pytest.raises(UnboundSymbol):
            Slp(("a",), (("d", sym("e")), ("e", a ** 2)), ())

    def test_duplicate_definition_rejected(self):
        with pytest.raises(InternalInvariantViolation):
            Slp(("a",), (("b", a), ("b", a ** 2)), ())

    def test_text_round_trip(self):
        s = self.build()
        again = Slp.from_text(s.to_text())
        assert again.generators == s.generators
        assert again.definitions == s.definitions
        assert again.relators == s.relators

    def test_from_text_skips_comments_and_blanks(self):
        s = Slp.from_text("# note\n\ngenerators: a\n\nrelator: a^2\n")
        assert s.generators == ("a",)
        assert s.relators == (a ** 2,)

    def test_json_round_trip(self):
        s = self.build()
        again = Slp.from_json(s.to_json())
        assert again.generators == s.generators
        assert again.definitions == s.definitions
        assert again.relators == s.relators

    def test_bit_length_sums_parts(self):
        s = self.build()
        expected = 2  # the two generators
        expected += bit_length(sym("g") ** 3) + bit_length(sym("g") ** 5)
        expected += bit_length(s.relators[0]) + bit_length(s.relators[1])
        assert s.bit_length() == expected

    def test_word_length_expands_definitions(self):
        s = self.build()
        # a^11 b^-5 -> 11 + 5*3 = 26; (z z^a)^2 -> 2*(5 + 5 + 2) = 24
        assert s.word_length() == 26 + 24


class TestEvaluate:
    def env(self):
        n = 7
        return {
            "a": parse_cycles("(1,2,3,4,5,6,7)", 1, n),
            "b": parse_cycles("(1,2)", 1, n),
        }

    def test_left_factor_applies_first(self):
        env = {
            "a": parse_cycles("(1,2)", 1, 3),
            "b": parse_cycles("(2,3)", 1, 3),
        }
        got = evaluate(a * b, env)
        assert got == parse_cycles("(1,3,2)", 1, 3)

    def test_power_and_inverse(self):
        env = self.env()
        assert evaluate(a ** 7, env).is_identity()
        assert evaluate(a ** -2, env) == env["a"] ** -2

    def test_conjugate_matches_carrier(self):
        env = self.env()
        got = evaluate(conj(b, a), env)
        assert got == env["a"].inverse() * env["b"] * env["a"]

    def test_commutator_matches_carrier(self):
        env = self.env()
        got = evaluate(comm(a, b), env)
        want = (env["a"].inverse() * env["b"].inverse() * env["a"] * env["b"])
        assert got == want

    def test_empty_word_is_identity(self):
        env = self.env()
        assert evaluate(GroupWord(), env).is_identity()

    def test_unbound_symbol(self):
        with pytest.raises(UnboundSymbol):
            evaluate(sym("q"), self.env())

    def test_evaluation_is_a_homomorphism_on_sample_words(self):
        env = self.env()
        u = a ** 3 * b
        v = conj(b, a) * a ** -1
        assert evaluate(u * v, env) == evaluate(u, env) * evaluate(v, env)
        assert evaluate(~u, env) == evaluate(u, env).inverse()

    def test_evaluate_slp_produces_definitions_and_relators(self):
        s = Slp(
            generators=("a",),
            definitions=(("b", a ** 2),),
            relators=(a ** 7, sym("b") * a ** -2),
        )
        env = GeneratorImages({"a": parse_cycles("(1,2,3,4,5,6,7)", 1, 7)})
        values, rel_values = evaluate_slp(s, env)
        assert values["b"] == env["a"] ** 2
        assert [v.is_identity() for v in rel_values] == [True, True]

    def test_evaluate_slp_requires_all_generators(self):
        s = Slp(generators=("a", "g"), definitions=(), relators=())
        with pytest.raises(UnboundSymbol):
            evaluate_slp(s, {"a": parse_cycles("(1,2)", 1, 2)})


class TestProductPair:
    def pair(self):
        l = parse_cycles("(1,2,3)", 1, 3)
        r = parse_cycles("(1,2)", 1, 2)
        return ProductPair(l, r)

    def test_componentwise_arithmetic(self):
        g = self.pair()
        assert (g * g).left == g.left ** 2
        assert g.inverse() * g == g.identity_like()
        assert (g ** 6).is_identity()
        assert not (g ** 3).is_identity()  # right component survives

    def test_order_is_lcm(self):
        assert self.pair().order() == 6

    def test_conjugate_componentwise(self):
        g = self.pair()
        h = ProductPair(parse_cycles("(2,3)", 1, 3), parse_cycles("()", 1, 2))
        got = g.conjugate(h)
        assert got.left == g.left.conjugate(h.left)
        assert got.right == g.right

    def test_generator_images_identity(self):
        env = GeneratorImages({"a": self.pair()})
        assert env.identity().is_identity()
        assert "a" in env and "q" not in env


@given(e=st.integers(-10 ** 9, 10 ** 9), m=st.integers(1, 10 ** 6))
@settings(max_examples=200, deadline=None)
def test_least_absolute_is_congruent_and_minimal(e, m):
    r = least_absolute(e, m)
    assert (r - e) % m == 0
    assert -m < 2 * r <= m


@given(exps=st.lists(st.integers(-9, 9), min_size=0, max_size=8))
@settings(max_examples=100, deadline=None)
def test_word_evaluation_matches_direct_product(exps):
    g = parse_cycles("(1,2,3,4,5)(6,7)", 1, 7)
    h = parse_cycles("(2,5)(3,6,7)", 1, 7)
    w = GroupWord()
    direct = g.identity_like()
    for i, e in enumerate(exps):
        base = a if i % 2 == 0 else b
        img = g if i % 2 == 0 else h
        if e:
            w = w * base ** e
            direct = direct * img ** e
    assert evaluate(w, {"a": g, "b": h}) == direct


def test_json_words_survive_serialization():
    import json

    w = comm(a ** 2, conj(b, a)) * (a * b) ** -3 * sym("c")
    data = json.loads(json.dumps(word_to_json(w)))
    assert word_from_json(data) == w
