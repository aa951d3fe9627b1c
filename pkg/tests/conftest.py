from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from racahpbw.freealg import NcPoly

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

letters = st.integers(min_value=0, max_value=5)
rationals = st.builds(Fraction, st.integers(-10, 10), st.integers(1, 6))
nonzero_rationals = rationals.filter(bool)


def words(max_len=4):
    return st.lists(letters, max_size=max_len).map(tuple)


def sorted_words(max_len=4):
    return words(max_len).map(lambda w: tuple(sorted(w)))


def polys(max_len=4, max_terms=4, word_strategy=None):
    ws = words(max_len) if word_strategy is None else word_strategy
    return st.dictionaries(ws, nonzero_rationals, max_size=max_terms).map(NcPoly)


def nonzero_polys(max_len=4, max_terms=4, word_strategy=None):
    ws = words(max_len) if word_strategy is None else word_strategy
    return st.dictionaries(ws, nonzero_rationals, min_size=1, max_size=max_terms).map(NcPoly)


NAMES = {"A": 0, "D": 1, "B": 2, "alpha": 3, "delta": 4, "beta": 5}


def word(text):
    return tuple(NAMES[x] for x in text.split())


def poly(terms):
    """Build a polynomial from ``{"A D": 2, "": Fraction(1, 2)}``-style dicts."""
    return NcPoly({word(k): Fraction(v) for k, v in terms.items()})
