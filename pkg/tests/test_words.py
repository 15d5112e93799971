from hypothesis import given, strategies as st

from selfsim.words import PostCriticalWord, Ray, fmt_word, is_rotation, parse_word, primitive_root

letters = st.lists(st.sampled_from("012"), min_size=1, max_size=6)


def test_primitive_root():
    assert primitive_root("0101") == ("0", "1")
    assert primitive_root("010") == ("0", "1", "0")


def test_ray_canonical_absorbs_preperiod():
    r = Ray.make(("1", "0"), ("1", "0"))
    assert r == Ray.make((), ("1", "0"))
    assert str(Ray.make(("1",), ("0",))) == "1(0)^inf"


def test_ray_shift_and_prefix():
    r = Ray.make(("2",), ("0", "1"))
    assert r.prefix(5) == ("2", "0", "1", "0", "1")
    assert r.shift(2) == Ray.make((), ("1", "0"))
    assert r.letter(4) == "1"


def test_ray_json_round_trip():
    r = Ray.make(("1",), ("0", "1"))
    assert Ray.from_json(r.to_json()) == r


def test_cofinal_rays_share_rotated_periods():
    assert Ray.make(("1",), ("0", "1")).is_cofinal(Ray.make((), ("1", "0")))
    assert not Ray.make((), ("0",)).is_cofinal(Ray.make((), ("1",)))


def test_postcritical_word_suffixes():
    p = PostCriticalWord.make(("0",), ("1",))
    assert str(p) == "^inf 0 1"
    assert p.last(3) == ("0", "0", "1")
    assert p.drop_last() == PostCriticalWord.make(("0",))
    assert PostCriticalWord.make(("0", "1"), ("0",)) == PostCriticalWord.make(("1", "0"))


def test_word_format_round_trip_multichar():
    w = ("00", "10")
    assert parse_word(fmt_word(w)) == w
    assert parse_word("0010", ["00", "01", "10", "11"]) == w


@given(letters, letters)
def test_ray_prefix_is_stable_under_canonical_form(pre, per):
    r = Ray.make(pre, per)
    n = len(pre) + 2 * len(per)
    assert r.prefix(n) == (tuple(pre) + tuple(per) * 3)[:n]


@given(letters, st.integers(0, 8))
def test_postcritical_last_matches_expansion(per, n):
    p = PostCriticalWord.make(per)
    long = tuple(per) * 10
    assert p.last(n) == long[len(long) - n:] if n else p.last(0) == ()


@given(letters)
def test_rotation_is_symmetric(w):
    r = w[1:] + w[:1]
    assert is_rotation(w, r) and is_rotation(r, w)
