"""Smoke test for the commclass Python extension.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`.
"""

import commclass
from commclass import Permutation, Word


def main():
    w0 = Permutation.longest(4)
    assert w0.images == [4, 3, 2, 1]
    assert w0.length() == 6
    assert Permutation([2, 1, 3]).compose(Permutation([1, 3, 2])) == Permutation([2, 3, 1])

    word = Word.parse("321323", 4)
    assert word.evaluate() == w0
    assert word.is_reduced()
    assert str(word.canonicalize()) == "321323"
    assert [str(x) for x in Word.parse("323123", 4).commutation_class()] == ["321323", "323123"]
    assert not Word.parse("323123", 4).is_canonical()
    assert str(word.apply_braid(4)) == "321232"
    assert word.class_size() == 2

    assert commclass.count_reduced_words_longest(4) == 16
    assert commclass.count_reduced_words(w0) == 16
    assert len(commclass.reduced_words(w0)) == 16

    counts = [commclass.count_commutation_classes(Permutation.longest(n)) for n in range(1, 8)]
    assert counts == [1, 1, 2, 8, 62, 908, 24698], counts
    assert commclass.count_commutation_classes(Permutation.longest(7), threads=2) == 24698
    assert commclass.known_class_count(10) == 18410581880
    assert commclass.known_class_count(11) is None

    classes = commclass.commutation_classes(w0, members=True)
    assert len(classes) == 8
    assert sorted(c.size for c in classes) == [1, 1, 1, 1, 2, 2, 4, 4]
    oracle = {frozenset(map(str, c)) for c in commclass.partition_reduced_words(w0)}
    listed = {frozenset(map(str, c.members)) for c in classes}
    assert oracle == listed

    canon = commclass.canonical_words(w0)
    assert [str(c) for c in canon] == [str(c.canonical) for c in classes]
    for c in canon:
        assert c.tiling_svg().count('class="rhombus"') == 6
        assert c.heap_svg().startswith("<svg")
        assert c.network_svg().startswith("<svg")

    try:
        commclass.count_commutation_classes(Permutation.longest(11), time_limit=0.01)
    except TimeoutError:
        pass
    else:
        raise AssertionError("expected a timeout")

    try:
        Word.parse("11", 2).tiling_svg()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    print("commclass", commclass.__version__, "smoke test passed")


if __name__ == "__main__":
    main()
