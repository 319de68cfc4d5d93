import string

from hypothesis import given, settings
from hypothesis import strategies as st

from optikit.fincat import decode_pair, encode_pair, finset
from optikit.optics import ConcreteLens, lens_abstract, lens_concretize
from optikit.poly import decode_fun, encode_fun

atoms = st.text(alphabet=string.ascii_lowercase + string.digits + "_.-", min_size=1, max_size=8)


@given(atoms, atoms)
def test_pair_encoding_round_trips(a, b):
    assert decode_pair(encode_pair(a, b)) == (a, b)


@given(atoms, atoms, atoms)
def test_pair_encoding_nests(a, b, c):
    outer = encode_pair(encode_pair(a, b), c)
    left, right = decode_pair(outer)
    assert decode_pair(left) == (a, b) and right == c


@given(st.dictionaries(atoms, atoms, min_size=0, max_size=6))
def test_fun_encoding_round_trips(table):
    assert decode_fun(encode_fun(table)) == table


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_random_lens_tables_round_trip(data):
    ns = data.draw(st.integers(1, 4))
    na = data.draw(st.integers(1, 4))
    nb = data.draw(st.integers(1, 4))
    nt = data.draw(st.integers(1, 4))
    s = finset("s", [f"s{i}" for i in range(ns)])
    t = finset("t", [f"t{i}" for i in range(nt)])
    a = finset("a", [f"a{i}" for i in range(na)])
    b = finset("b", [f"b{i}" for i in range(nb)])
    get = {x: data.draw(st.sampled_from(a.elements), label=f"get[{x}]") for x in s}
    put = {
        (x, y): data.draw(st.sampled_from(t.elements), label=f"put[{x},{y}]")
        for x in s
        for y in b
    }
    l = ConcreteLens(s, t, a, b, get, put)
    l2 = lens_concretize(lens_abstract(l))
    assert l2.get == l.get and l2.put == l.put
