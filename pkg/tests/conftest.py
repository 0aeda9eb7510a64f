from fractions import Fraction

from hypothesis import strategies as st

from rqkernel.exactnum import QPoly, QRat
from rqkernel.freealg import NcPoly

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)

polys = st.lists(st.integers(-4, 4), max_size=5).map(QPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
qrats = st.builds(QRat, polys, nonzero_polys)
# no poles anywhere, so safe to specialize q
qpolys = polys.map(QRat)
nonzero_qrats = qrats.filter(lambda r: not r.is_zero())


def words(letters="ABCg", max_size=4):
    return st.text(alphabet=letters, max_size=max_size)


def ncpolys(letters="ABCg", max_words=4, max_len=4, coeffs=None):
    coeffs = coeffs if coeffs is not None else st.integers(-3, 3).map(Fraction)
    return st.dictionaries(words(letters, max_len), coeffs, max_size=max_words).map(NcPoly)


def weight_ncpolys(max_weight, letters="ABCg", max_words=4, coeffs=qrats):
    from rqkernel.freealg import word_weight

    return ncpolys(letters, max_words, max_weight, coeffs).map(
        lambda x: NcPoly({w: c for w, c in x.items() if word_weight(w) <= max_weight})
    )
