import random

from hypothesis import given, settings, strategies as st

from hydragroups.group import IDENTITY, NormalForm, collect, eval_hword, hword_reduce, nf_invert, nf_multiply
from hydragroups.notation import Term, parse, parse_free_word as W, parse_hword as X


def NF(text, r):
    return NormalForm(W(text), r)


def test_collect_examples():
    assert collect(parse("t^-1 a2 t")) == NF("a2 a1", 0)
    assert collect(parse("a1 t a2 t")) == NF("a1 a2 a1^-1", 2)
    assert collect(()) == IDENTITY


def test_eval_examples():
    assert eval_hword(X("x1")) == NF("a1", 1)
    assert eval_hword(X("x2 x2 x1 x2 x1^3 x2 x1^7")) == NF("a2^4", 15)
    assert eval_hword(X("x2 x2^-1")) == IDENTITY


def test_multiply_invert_examples():
    assert nf_multiply(NF("a2", 0), NF("e", 1)) == NF("a2", 1)
    assert nf_multiply(NF("e", 1), NF("a2", 0)) == NF("a2 a1^-1", 1)
    g = NF("a3 a1^-1", -2)
    assert nf_multiply(g, IDENTITY) == g
    assert nf_invert(NF("a1", 0)) == NF("a1^-1", 0)
    assert nf_invert(NF("a2", 1)) == NF("a1^-1 a2^-1", -1)
    assert nf_invert(IDENTITY) == IDENTITY


def test_hword_reduce_examples():
    assert hword_reduce(X("x1 x1^-1")) == ()
    u = X("x2 x2 x1 x2 x1^3 x2 x1^7")
    assert hword_reduce(u) == u and len(u) == 15
    assert hword_reduce(X("x2 x1 x1^-1 x3")) == X("x2 x3")


def test_json():
    assert NF("a2^4", 15).to_json() == {"v": "a2^4", "r": 15}


gterm = st.one_of(
    st.builds(Term, st.just("a"), st.integers(1, 3), st.sampled_from([1, -1, 2])),
    st.builds(Term, st.just("t"), st.just(0), st.integers(-2, 2)),
)
gwords = st.lists(gterm, max_size=6)


@settings(max_examples=200)
@given(gwords, gwords)
def test_collect_is_homomorphism(u, v):
    assert collect(u + v) == nf_multiply(collect(u), collect(v))


@settings(max_examples=200)
@given(gwords)
def test_inverse(u):
    g = collect(u)
    assert nf_multiply(g, nf_invert(g)) == IDENTITY
    assert nf_multiply(nf_invert(g), g) == IDENTITY


def test_x_letters_are_a_t():
    assert collect(parse("x2 x1^-3")) == collect(parse("a2 t t^-1 a1^-1 t^-1 a1^-1 t^-1 a1^-1"))


def test_freeness_sample(words):
    # reduced H-words over x_1..x_3 up to length 6: a random sample of 10^4
    pool = words(3, 6)
    rng = random.Random(7)
    sample = rng.sample(pool, 10_000)
    seen = {}
    for sigma in sample:
        g = eval_hword(sigma)
        assert seen.setdefault(g, sigma) == sigma
        if sigma:
            # nothing nontrivial evaluates to a pure power of t
            assert g.v
