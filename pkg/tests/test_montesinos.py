import pytest
from hypothesis import given
from hypothesis import strategies as st

from sfsurgery import montesinos, seifert
from sfsurgery.errors import DegenerateError, NotationError
from sfsurgery.exact import slope
from sfsurgery.montesinos import MontesinosLink, parse_link
from sfsurgery.seifert import SFSType

M = MontesinosLink.of
K = M(0, "1/3", "-1/3", "-1/5")


def family_t1(n):
    return M(0, "2/5", slope(11 * n + 3, -15 * n - 4), "1/3")


class TestNormalize:
    def test_pretzel(self):
        assert montesinos.normalize(K) == M(-2, "1/3", "2/3", "4/5")

    def test_already_normal(self):
        link = M(0, "1/3", "1/2", "1/2")
        assert montesinos.normalize(link) == link

    def test_absorbs_and_sorts(self):
        assert montesinos.normalize(M(1, "2/5", "-3/4", "1/3")) == M(0, "1/4", "1/3", "2/5")

    @pytest.mark.parametrize("bad", ["2", "0", "inf"])
    def test_degenerate_tangle(self, bad):
        with pytest.raises(DegenerateError):
            montesinos.normalize(M(0, "1/3", bad, "1/5"))


class TestDeterminant:
    def test_pretzel_matches_pretzel_formula(self):
        p, q, r = -3, 3, 5
        assert montesinos.determinant(K) == abs(p * q + q * r + r * p) == 9

    def test_untwisted_quotient_knot(self):
        assert montesinos.determinant(M(0, "2/5", "-3/4", "1/3")) == 1

    @pytest.mark.parametrize("n", range(-60, 61))
    def test_twist_family_is_unit(self, n):
        assert montesinos.determinant(family_t1(n)) == 1


class TestDoubleBranchedCover:
    def test_type_345(self):
        cover = montesinos.double_branched_cover(M(0, "2/5", "-3/4", "1/3"))
        assert seifert.type_of(cover) == SFSType.of(3, 4, 5)

    def test_family_n1(self):
        assert seifert.type_of(montesinos.double_branched_cover(family_t1(1))) == SFSType.of(3, 5, 19)

    def test_two_tangles_rejected(self):
        with pytest.raises(DegenerateError, match="lens"):
            montesinos.double_branched_cover(M(0, "1/2", "1/2"))

    def test_homology_order_is_determinant(self):
        assert seifert.h1(montesinos.double_branched_cover(K)).order == 9


class TestEquivalent:
    def test_cyclic_permutation(self):
        assert montesinos.equivalent(K, M(0, "-1/3", "-1/5", "1/3"))

    def test_mirror(self):
        mirror = M(0, "-1/3", "1/3", "1/5")
        assert montesinos.equivalent(K, mirror)
        assert not montesinos.equivalent(K, mirror, oriented=True)

    def test_invariant_mismatch(self):
        other = M(0, "1/3", "1/3", "1/5")
        assert montesinos.determinant(other) == 39
        assert not montesinos.equivalent(other, K)

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateError):
            montesinos.equivalent(M(0, "1/3", "1/5"), K)

    def test_four_tangles_respect_cyclic_order(self):
        a = M(0, "1/2", "1/3", "1/2", "1/3")
        assert montesinos.equivalent(a, M(0, "1/3", "1/2", "1/3", "1/2"))
        assert not montesinos.equivalent(a, M(0, "1/2", "1/2", "1/3", "1/3"))


fractions = st.builds(slope, st.integers(-40, 40), st.integers(2, 12)).filter(lambda t: t.denominator >= 2)
links = st.builds(lambda e, ts: MontesinosLink(e, tuple(ts)), st.integers(-3, 3),
                  st.lists(fractions, min_size=3, max_size=5))


@given(links)
def test_determinant_invariant_under_normalize(link):
    assert montesinos.determinant(montesinos.normalize(link)) == montesinos.determinant(link)


@given(links, st.randoms())
def test_determinant_is_cover_homology(link, rnd):
    det = montesinos.determinant(link)
    group = seifert.h1(montesinos.double_branched_cover(link))
    if det:
        assert group.order == det
    else:
        assert group.free_rank >= 1
    shuffled = list(link.tangles)
    rnd.shuffle(shuffled)
    assert montesinos.determinant(MontesinosLink(link.integer_part, tuple(shuffled))) == det


@given(links, st.integers(0, 10), st.booleans())
def test_equivalence_laws(link, shift, flip):
    assert montesinos.equivalent(link, link)
    ts = list(link.tangles)
    k = shift % len(ts)
    moved = ts[k:] + ts[:k]
    if flip:
        moved.reverse()
    other = MontesinosLink(link.integer_part, tuple(moved))
    assert montesinos.equivalent(link, other) and montesinos.equivalent(other, link)
    mirror = montesinos.mirror(link)
    assert montesinos.equivalent(link, mirror)
    assert montesinos.determinant(mirror) == montesinos.determinant(link)
    assert seifert.same_sfs(montesinos.double_branched_cover(link), montesinos.double_branched_cover(other))


class TestParse:
    def test_round_trip(self):
        assert parse_link(" M( 0 ; 1/3, -1/3 , -1/5 ) ") == K
        assert parse_link(str(K)) == K

    @pytest.mark.parametrize("bad", ["M(0, 1/3)", "N(0; 1/3)", "M(x; 1/3)", "M(0; 1/a)"])
    def test_bad(self, bad):
        with pytest.raises(NotationError):
            parse_link(bad)
