import pytest
from hypothesis import given

from beckpart.partition import (Partition, PartitionParseError, classify,
                                difference, parse_partition, stats, union)
from helpers import partitions


def test_parse_plain_list():
    lam = parse_partition("5,3,3,1")
    assert lam.pairs == ((5, 1), (3, 2), (1, 1))
    assert lam.size == 12


def test_parse_exponent_notation():
    lam = parse_partition("3^2,1^4,5")
    assert lam.pairs == ((5, 1), (3, 2), (1, 4))
    assert lam.size == 15


def test_parse_empty_string_is_partition_of_zero():
    lam = parse_partition("")
    assert lam.pairs == ()
    assert lam.size == 0


def test_parse_accumulates_repeated_tokens():
    assert parse_partition("2,2^2") == parse_partition("2^3")


@pytest.mark.parametrize("text,bad", [
    ("5,x,1", "x"),
    ("3^y", "3^y"),
    ("0", "0"),
    ("-2", "-2"),
    ("3^0", "3^0"),
    ("4^-1", "4^-1"),
])
def test_parse_errors_name_the_offending_token(text, bad):
    with pytest.raises(PartitionParseError, match=bad.replace("^", "\\^")):
        parse_partition(text)


def test_render_uses_exponents():
    assert parse_partition("5,3,3,1,1,1,1").render() == "5,3^2,1^4"
    assert Partition().render() == ""


@given(partitions)
def test_parse_render_roundtrip(lam):
    assert parse_partition(lam.render()) == lam


def test_union_examples():
    assert union(Partition.from_parts([3, 1]), Partition.from_parts([3, 2])
                 ).pairs == ((3, 2), (2, 1), (1, 1))
    lam = parse_partition("4,2")
    assert union(lam, Partition()) == lam
    assert union(parse_partition("2^2"), parse_partition("2")) == \
        parse_partition("2^3")


@given(partitions, partitions)
def test_union_commutative_and_size_additive(a, b):
    assert union(a, b) == union(b, a)
    assert union(a, b).size == a.size + b.size


@given(partitions, partitions, partitions)
def test_union_associative(a, b, c):
    assert union(union(a, b), c) == union(a, union(b, c))


def test_difference_examples():
    assert difference(parse_partition("3^2,2,1"), parse_partition("3,2")) == \
        parse_partition("3,1")
    lam = parse_partition("7,7,2")
    assert difference(lam, Partition()) == lam


def test_difference_insufficient_multiplicity():
    with pytest.raises(ValueError, match="not a sub-multiset.*part 2"):
        difference(parse_partition("2,1"), parse_partition("2^2"))


@given(partitions, partitions)
def test_difference_inverts_union(a, b):
    assert difference(union(a, b), b) == a


def test_stats_spec_example_r2():
    st = stats(parse_partition("2,1,1"), 2)
    assert st.ell == 3
    assert st.ell_mod == (1, 2)
    assert st.ell_bar_resid[1] == 1
    assert st.ell_bar == 2


def test_stats_spec_example_r3():
    st = stats(parse_partition("2,2"), 3)
    assert st.ell == 2
    assert st.ell_mod == (0, 0, 2)
    assert st.per_part == ((2, 2, 2, 0),)
    assert st.ell_bar_resid[1] == 1 and st.ell_bar_resid[2] == 1


def test_stats_empty():
    st = stats(Partition(), 5)
    assert st.ell == 0 and st.ell_bar == 0
    assert st.ell_mod == (0,) * 5
    assert st.per_part == ()
    assert st.t_window_count == 0


def test_stats_window_count():
    # r=2: window is multiplicity exactly 3
    assert stats(parse_partition("2^3,1^4"), 2).t_window_count == 1
    # r=3: window is multiplicity 4 or 5
    assert stats(parse_partition("2^4,1^6"), 3).t_window_count == 1


@pytest.mark.parametrize("r", [2, 3, 4])
@given(lam=partitions)
def test_stats_invariants(lam, r):
    st = stats(lam, r)
    assert sum(st.ell_mod) == st.ell == lam.num_parts
    assert st.ell_bar == len(lam.pairs)
    for part, mult, d, nonresid in st.per_part:
        assert mult == d + nonresid
        assert 0 <= d <= r - 1
        assert nonresid % r == 0
    # residual-depth counts are a non-increasing suffix-sum family
    for t in range(1, r):
        assert st.ell_bar_resid[t - 1] >= st.ell_bar_resid[t]
    assert st.ell_bar_resid[0] == st.ell_bar
    assert st.ell_bar_resid[1] == sum(
        1 for _, m in lam.pairs if m % r != 0)
    assert st.nonresidual_total == sum(m - m % r for _, m in lam.pairs)


def test_classify_examples():
    assert classify(parse_partition("4,2^2,1"), 2) == (2, 1)
    assert classify(parse_partition("3,1"), 3) == (1, 0)
    assert classify(Partition(), 2) == (0, 0)


@pytest.mark.parametrize("r", [2, 3])
@given(lam=partitions)
def test_classify_agrees_with_recount(lam, r):
    idx = classify(lam, r)
    assert idx.j_div == len({p for p, _ in lam.pairs if p % r == 0})
    assert idx.j_rep == len({p for p, m in lam.pairs if m >= r})


def test_modulus_validation():
    lam = parse_partition("2,1")
    with pytest.raises(ValueError, match="r must be >= 2"):
        stats(lam, 1)
    with pytest.raises(ValueError, match="r must be >= 2"):
        classify(lam, 0)


def test_partition_is_immutable_and_hashable():
    lam = parse_partition("3,1")
    with pytest.raises(AttributeError):
        lam.size = 7
    assert len({lam, parse_partition("3,1"), parse_partition("2,2")}) == 2


def test_constructor_rejects_bad_pairs():
    with pytest.raises(ValueError, match="part must be positive"):
        Partition([(0, 1)])
    with pytest.raises(ValueError, match="multiplicity must be positive"):
        Partition([(3, 0)])
