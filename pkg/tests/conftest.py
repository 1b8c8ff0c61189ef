import hypothesis
from hypothesis import strategies as st

from cohomring import poly
from cohomring.rings import IntegerRing, ModularRing

hypothesis.settings.register_profile(
    "suite", deadline=None, max_examples=80, derandomize=True
)
hypothesis.settings.load_profile("suite")

Z = IntegerRing()
Z2 = ModularRing(2)

rings = st.sampled_from([IntegerRing(), ModularRing(2), ModularRing(7), ModularRing(12)])

coeffs = st.integers(min_value=-100, max_value=100)
degrees = st.integers(min_value=0, max_value=30)


def uni_sparse_polys(ring):
    return st.lists(st.tuples(degrees, coeffs), max_size=8).map(
        lambda ts: poly.uni_sparse(ring, ts)
    )


def uni_dense_polys(ring):
    return st.lists(coeffs, max_size=31).map(lambda cs: poly.uni_dense(ring, cs))


def uni_normal_polys(ring):
    return st.lists(coeffs, max_size=31).map(
        lambda cs: poly.UniNormal.make(ring, cs)
    )


def multi_polys(ring, arity=2, max_exp=6, max_terms=6):
    exps = st.tuples(*([st.integers(0, max_exp)] * arity))
    return st.lists(st.tuples(exps, coeffs), max_size=max_terms).map(
        lambda ts: poly.multi(ring, arity, ts)
    )
