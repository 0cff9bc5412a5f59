import pytest
from hypothesis import given, strategies as st

from starshift import core_words as cw
from starshift.errors import SizeLimitError


class TestBuildW:
    def test_first_words(self):
        assert cw.build_w(1) == "a"
        assert cw.build_w(2) == "aDa"
        assert cw.build_w(3) == "aDaCaDa"
        assert cw.build_w(4) == "aDaCaDaBaDaCaDa"

    @pytest.mark.parametrize("n", range(1, 17))
    def test_shape(self, n):
        w = cw.build_w(n)
        assert len(w) == 2**n - 1
        assert w == w[::-1]
        assert cw.is_alternating(w)
        assert w[0] == "a" and w[-1] == "a"

    @pytest.mark.parametrize("n", range(1, 16))
    def test_recursion(self, n):
        assert cw.build_w(n + 1) == cw.build_w(n) + cw.alpha_choice(n) + cw.build_w(n)

    def test_large_index(self):
        w = cw.build_w(20)
        assert len(w) == 2**20 - 1
        assert w[0] == w[-1] == "a"
        assert w == w[::-1]
        assert cw.tau_fixed_point_prefix(2**16 - 1) == cw.build_w(16)

    def test_cap(self):
        with pytest.raises(SizeLimitError, match="24"):
            cw.build_w(25)
        assert cw.build_w(2, cap=2) == "aDa"

    def test_bad_index(self):
        with pytest.raises(ValueError):
            cw.build_w(0)


def test_alpha_choice_cycle():
    assert [cw.alpha_choice(n) for n in range(1, 7)] == ["D", "C", "B", "D", "C", "B"]


def test_is_alternating_examples():
    assert cw.is_alternating("aBa")
    assert not cw.is_alternating("aBBa")
    assert cw.is_alternating("")
    with pytest.raises(ValueError):
        cw.is_alternating("ax")


def test_reverse():
    assert cw.reverse("aD") == "Da"
    assert cw.reverse("") == ""
    assert cw.reverse(cw.build_w(4)) == cw.build_w(4)


class TestGroupWords:
    def test_kappa_examples(self):
        assert cw.kappa("ad") == "acac"
        assert cw.kappa("") == ""
        assert cw.kappa(cw.kappa("b")) == "c"

    def test_kappa_of_relator(self):
        assert cw.kappa("adadadad") == "ac" * 8

    def test_free_reduce_examples(self):
        assert cw.free_reduce("aa") == ""
        assert cw.free_reduce("bc") == "d"
        assert cw.free_reduce("bd") == "c"
        assert cw.free_reduce("cd") == "b"
        assert cw.free_reduce("baab") == ""
        assert cw.free_reduce("bcd") == ""

    @given(st.text(alphabet="abcd", max_size=40))
    def test_free_reduce_idempotent_and_short(self, word):
        reduced = cw.free_reduce(word)
        assert cw.free_reduce(reduced) == reduced
        assert len(reduced) <= len(word)
        # reduced words never contain a square or an adjacent Klein pair
        assert "aa" not in reduced
        assert not any(
            x != "a" and y != "a" for x, y in zip(reduced, reduced[1:])
        )

    @given(st.text(alphabet="abcd", max_size=30))
    def test_word_times_inverse_cancels(self, word):
        assert cw.free_reduce(word + word[::-1]) == ""


class TestFixedPoint:
    def test_examples(self):
        assert cw.tau_fixed_point_prefix(3) == "aDa"
        assert cw.tau_fixed_point_prefix(7) == "aDaCaDa"
        assert cw.tau_fixed_point_prefix(1) == "a"

    @pytest.mark.parametrize("n", range(1, 15))
    def test_agrees_with_w(self, n):
        assert cw.tau_fixed_point_prefix(2**n - 1) == cw.build_w(n)

    def test_prefixes_of_all_long_words(self):
        prefix = cw.tau_fixed_point_prefix(100)
        for n in range(7, 12):
            assert cw.build_w(n).startswith(prefix)

    def test_group_substitution_generates_the_same_words(self):
        # kappa read on the shift alphabet (a -> aDa, B -> D, C -> B,
        # D -> C) iterates straight through the w_n ladder, so both
        # substitutions generate the same one-sided fixed point
        table = {"a": "aDa", "B": "D", "C": "B", "D": "C"}
        word = "a"
        for n in range(1, 12):
            assert word == cw.build_w(n)
            word = "".join(table[c] for c in word)


class TestLanguage:
    def test_contains_examples(self):
        assert cw.language_contains("Da")
        assert not cw.language_contains("aa")
        assert cw.language_contains("BaD")
        assert cw.language_contains("")

    def test_words_examples(self):
        assert cw.language_words(1) == ["a", "B", "C", "D"]
        assert cw.language_words(2) == ["aB", "aC", "aD", "Ba", "Ca", "Da"]
        assert cw.language_words(0) == [""]

    @pytest.mark.parametrize("length", [1, 2, 3, 5, 8, 13])
    def test_closed_under_factors_and_reversal(self, length):
        for u in cw.language_words(length):
            assert cw.language_contains(u)
            assert cw.language_contains(cw.reverse(u))
            for i in range(length):
                assert cw.language_contains(u[i:])
                assert cw.language_contains(u[:i])

    @pytest.mark.parametrize("length", range(0, 64))
    def test_three_characterizations_agree(self, length):
        n = 1
        while 2**n - 1 < length:
            n += 1
        host = cw.build_w(n + 3)
        in_host = {host[i : i + length] for i in range(len(host) - length + 1)}
        in_pairs = set()
        w = cw.build_w(n)
        for alpha in "BCD":
            double = w + alpha + w
            in_pairs.update(
                double[i : i + length] for i in range(len(double) - length + 1)
            )
        deep = cw.build_w(12)
        in_deep = {deep[i : i + length] for i in range(len(deep) - length + 1)}
        assert in_host == in_pairs == in_deep

    @pytest.mark.parametrize("n", range(1, 7))
    def test_minimality_bound(self, n):
        w = cw.build_w(n)
        for u in cw.language_words(2 * len(w) + 1):
            assert w in u

    def test_cap_error(self):
        with pytest.raises(SizeLimitError):
            cw.language_contains("aD" * 2000, cap=12)
