from stabgraph.bitset import bit, full_mask, iter_bits, lowest, mask_of, members, popcount, to_frozenset


def test_mask_helpers():
    mask = mask_of([5, 0, 3])

    assert mask == 0b101001
    assert members(mask) == (0, 3, 5)
    assert list(iter_bits(mask)) == [0, 3, 5]
    assert popcount(mask) == 3
    assert lowest(mask) == 0
    assert lowest(mask & ~bit(0)) == 3
    assert to_frozenset(mask) == frozenset({0, 3, 5})


def test_full_mask_covers_every_vertex():
    assert full_mask(4) == 0b1111
    assert popcount(full_mask(64)) == 64
    assert members(full_mask(0)) == ()
