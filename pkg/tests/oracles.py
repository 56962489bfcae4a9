"""Independent oracles for the test suite.

Everything here recomputes expected values by a different route than the
package: canonical forms by full orbit enumeration, smoothings by cyclic
word surgery, kink deletion by literal letter removal, and the triangle
slide by swapping adjacent letter pairs.  Results are compared canonically.
"""

from __future__ import annotations

import itertools

from freeknot.diagrams import CanonicalCode, GaussCode


def brute_canonical(code: GaussCode) -> CanonicalCode:
    """Minimum over the full symmetry orbit, enumerated outright."""
    words = code.words
    if not words:
        return CanonicalCode((), code.free_loops)
    per_word_variants = []
    for w in words:
        vs = set()
        for base in (w, w[::-1]):
            for r in range(len(base)):
                vs.add(base[r:] + base[:r])
        per_word_variants.append(sorted(vs, key=repr))
    best = None
    for order in itertools.permutations(range(len(words))):
        for choice in itertools.product(*(per_word_variants[i] for i in order)):
            mapping: dict = {}
            relabeled = []
            for w in choice:
                out = []
                for lab in w:
                    if lab not in mapping:
                        mapping[lab] = len(mapping)
                    out.append(mapping[lab])
                relabeled.append(tuple(out))
            cand = tuple(relabeled)
            if best is None or cand < best:
                best = cand
    return CanonicalCode(best, code.free_loops)


def _rotate_to(word: tuple, chord) -> tuple:
    i = word.index(chord)
    return word[i:] + word[:i]


def word_smooth(code: GaussCode, chord) -> list[GaussCode]:
    """The two smoothings of ``chord`` by cyclic word surgery.

    Same-circle chord (word = c A c B): the results are the two circles
    (A, B) and the single circle A + reversed(B).  Chord spanning circles
    c A and c B: the merged circles A + B and A + reversed(B).  Empty
    circles become free loops."""
    hosts = [wi for wi, w in enumerate(code.words) if chord in w]
    others = [w for wi, w in enumerate(code.words) if wi not in hosts]

    def assemble(new_words: list[tuple]) -> GaussCode:
        loops = code.free_loops + sum(1 for w in new_words if not w)
        kept = tuple(w for w in new_words if w) + tuple(others)
        return GaussCode(kept, loops)

    if len(hosts) == 1:
        w = _rotate_to(code.words[hosts[0]], chord)
        j = w.index(chord, 1)
        a, b = w[1:j], w[j + 1:]
        return [assemble([a, b]), assemble([a + b[::-1]])]
    w1 = _rotate_to(code.words[hosts[0]], chord)[1:]
    w2 = _rotate_to(code.words[hosts[1]], chord)[1:]
    return [assemble([w1 + w2]), assemble([w1 + w2[::-1]])]


def kink_delete(code: GaussCode, chord) -> GaussCode:
    """R1 oracle: remove a chord whose occurrences are cyclically adjacent."""
    new_words = []
    loops = code.free_loops
    for w in code.words:
        if chord not in w:
            new_words.append(w)
            continue
        rot = _rotate_to(w, chord)
        if rot[1] != chord and rot[-1] == chord:
            rot = rot[-1:] + rot[:-1]
        assert rot[0] == rot[1] == chord, "occurrences are not adjacent"
        rest = rot[2:]
        if rest:
            new_words.append(rest)
        else:
            loops += 1
    return GaussCode(tuple(new_words), loops)


def find_word_triangles(word: tuple) -> list[tuple]:
    """Triples of chords pairwise adjacent in the cyclic word, as three
    disjoint adjacent position pairs; the slide sites at the word level."""
    n = len(word)
    out = []
    adjacencies: dict = {}
    for i in range(n):
        a, b = word[i], word[(i + 1) % n]
        if a != b:
            adjacencies.setdefault(frozenset((a, b)), []).append(i)
    for trio in itertools.combinations(sorted({lab for lab in word}, key=repr), 3):
        p, q, r = trio
        pairs = [frozenset((p, q)), frozenset((p, r)), frozenset((q, r))]
        if not all(pair in adjacencies for pair in pairs):
            continue
        for picks in itertools.product(*(adjacencies[pair] for pair in pairs)):
            used = set()
            ok = True
            for i in picks:
                if i in used or (i + 1) % n in used:
                    ok = False
                    break
                used.add(i)
                used.add((i + 1) % n)
            if ok:
                out.append((trio, picks))
    return out


def swap_adjacent_pairs(word: tuple, picks) -> tuple:
    """Apply the slide at the word level: each of the three adjacent pairs
    swaps its two letters."""
    n = len(word)
    w = list(word)
    for i in picks:
        j = (i + 1) % n
        w[i], w[j] = w[j], w[i]
    return tuple(w)
