"""Randomized cross-checking of the index against the naive matcher.

Static characters are drawn from ``a..z`` prefixes, parameter characters
from ``A..Z`` prefixes, so any sigma/pi sizes up to 26 stay disjoint and
reproducers read naturally.  Everything is seeded and deterministic.
"""

import random
import string
from dataclasses import dataclass

from .encoding import Alphabet
from .heap import build
from .query import match, naive_match

STATIC_POOL = string.ascii_lowercase
PARAM_POOL = string.ascii_uppercase


def fuzz_alphabet(pi_size: int) -> Alphabet:
    """The alphabet matching :func:`random_pstring`'s parameter pool."""
    if not 0 <= pi_size <= len(PARAM_POOL):
        raise ValueError(f"pi size out of range: {pi_size}")
    return Alphabet(PARAM_POOL[:pi_size])


def random_pstring(seed: int, n: int, sigma_size: int, pi_size: int) -> str:
    """Uniform random p-string over the declared pools."""
    if not 0 <= sigma_size <= len(STATIC_POOL):
        raise ValueError(f"sigma size out of range: {sigma_size}")
    if not 0 <= pi_size <= len(PARAM_POOL):
        raise ValueError(f"pi size out of range: {pi_size}")
    pool = STATIC_POOL[:sigma_size] + PARAM_POOL[:pi_size]
    if n > 0 and not pool:
        raise ValueError("cannot draw characters from empty alphabets")
    rng = random.Random(seed)
    return "".join(rng.choice(pool) for _ in range(n))


def random_pattern(rng: random.Random, text: str, pool: str, max_m: int = 20) -> str:
    """A query pattern: a text window, a mutated window, or fresh noise.

    Window-derived patterns keep the occurrence rate high enough to
    exercise the matcher's verification paths, not just its rejections.
    """
    n = len(text)
    mode = rng.randrange(3) if n else 2
    if mode < 2 and n:
        m = rng.randint(1, min(max_m, n))
        i = rng.randint(1, n - m + 1)
        window = list(text[i - 1:i - 1 + m])
        if mode == 1:  # perturb one character
            window[rng.randrange(m)] = rng.choice(pool)
        return "".join(window)
    m = rng.randint(1, max_m)
    return "".join(rng.choice(pool) for _ in range(m))


@dataclass
class Divergence:
    """A counterexample: the two matchers disagreed."""

    text: str
    pi: str
    pattern: str
    expected: list
    got: list


def _diverges(text: str, pattern: str, alphabet: Alphabet):
    got = match(build(text, alphabet), pattern)
    expected = naive_match(text, pattern, alphabet)
    return None if got == expected else (expected, got)


def minimize(text: str, pattern: str, alphabet: Alphabet):
    """Greedily shrink a diverging instance while it still diverges."""
    assert _diverges(text, pattern, alphabet) is not None
    changed = True
    while changed:
        changed = False
        for k in range(len(text)):
            cand = text[:k] + text[k + 1:]
            if _diverges(cand, pattern, alphabet) is not None:
                text = cand
                changed = True
                break
        if changed:
            continue
        for k in range(len(pattern)):
            cand = pattern[:k] + pattern[k + 1:]
            if cand and _diverges(text, cand, alphabet) is not None:
                pattern = cand
                changed = True
                break
    return text, pattern


def verify_random(samples: int, max_n: int, sigma_size: int, pi_size: int,
                  seed: int):
    """Run ``samples`` random instances; return a minimized
    :class:`Divergence` for the first disagreement, else None."""
    alphabet = fuzz_alphabet(pi_size)
    pool = STATIC_POOL[:sigma_size] + PARAM_POOL[:pi_size]
    if not pool:
        raise ValueError("cannot fuzz with empty alphabets")
    rng = random.Random(seed)
    for _ in range(samples):
        text = "".join(rng.choice(pool) for _ in range(rng.randint(0, max_n)))
        pattern = random_pattern(rng, text, pool)
        outcome = _diverges(text, pattern, alphabet)
        if outcome is not None:
            text, pattern = minimize(text, pattern, alphabet)
            expected, got = _diverges(text, pattern, alphabet) or outcome
            return Divergence(text, "".join(sorted(alphabet.pi)), pattern,
                              expected, got)
    return None
