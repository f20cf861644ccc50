import numpy as np
import pytest

from omega.groups import parse_group_spec
from omega.oracle import (
    CapExceeded,
    Matrix,
    MatrixGroup,
    build_field,
    center_of,
    classical_generators,
    enumerate_group,
    quotient_spectrum,
    spectrum_table,
)
from omega.oracle.matgroup import _VoidCodec, _make_codec


def test_field_modulus_is_smallest():
    # integer code of the modulus, base-p digits with the constant first
    assert build_field(2, 2).modulus == (1, 1, 1)      # x^2+x+1 = code 7
    assert build_field(2, 3).modulus == (1, 1, 0, 1)   # x^3+x+1 = code 11
    assert build_field(3, 2).modulus == (1, 0, 1)      # x^2+1 = code 10
    assert build_field(5, 2).modulus == (2, 0, 1)      # x^2+2 = code 27
    assert build_field(7, 1).modulus == (0, 1)


def test_field_axioms_sampled():
    rng = np.random.default_rng(11)
    for f in (build_field(2, 2), build_field(3, 2), build_field(2, 3),
              build_field(7, 2), build_field(2, 8)):
        a = rng.integers(0, f.q, 300)
        b = rng.integers(0, f.q, 300)
        c = rng.integers(0, f.q, 300)
        assert (f.mul_many(a, f.add_many(b, c))
                == f.add_many(f.mul_many(a, b), f.mul_many(a, c))).all()
        assert (f.add_many(a, b) == f.add_many(b, a)).all()
        assert (f.mul_many(f.mul_many(a, b), c)
                == f.mul_many(a, f.mul_many(b, c))).all()
        for x in map(int, a[:50]):
            assert f.add(x, f.neg(x)) == 0
            if x:
                assert f.mul(x, f.inv(x)) == 1
            # frobenius is a field automorphism
            y = int(b[0])
            assert f.frob(f.add(x, y), 1) == f.add(f.frob(x, 1), f.frob(y, 1))
            assert f.frob(f.mul(x, y), 1) == f.mul(f.frob(x, 1), f.frob(y, 1))


def test_field_generator_cycles():
    f = build_field(3, 2)
    seen = set()
    x = 1
    for _ in range(f.q - 1):
        x = f.mul(x, f.generator)
        seen.add(x)
    assert len(seen) == f.q - 1 and x == 1


def test_field_rejects_bad_input():
    with pytest.raises(ValueError):
        build_field(4)
    with pytest.raises(ValueError):
        build_field(6, 2)
    with pytest.raises(ValueError):
        build_field(2, 17)  # past the 2^16 cap
    with pytest.raises(ValueError):
        build_field(257, 2)


def test_matrix_basics():
    f = build_field(3)
    m = Matrix(f, [[1, 1], [0, 1]])
    assert m.order() == 3
    assert (m ** 3).is_identity()
    assert m ** 7 == m
    assert (m @ m.inverse()).is_identity()
    assert (m ** -2) == (m.inverse() @ m.inverse())
    with pytest.raises(AssertionError):
        Matrix(f, [[1, 1], [1, 1]]).inverse()
    f4 = build_field(2, 2)
    c = Matrix(f4, [[2, 0], [0, 3]]).conj_entries(1)
    assert c == Matrix(f4, [[3, 0], [0, 2]])


def test_sl2_3_exhaustive():
    t = enumerate_group(classical_generators("A(1,3)u"))
    assert t.size == 24
    assert t.spectrum == (1, 2, 3, 4, 6)
    assert t.order_histogram == {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}
    # every element order agrees with naive repeated multiplication
    naive = sorted(t.element(i).order() for i in range(t.size))
    assert naive == sorted(t.orders().tolist())


def test_two_models_of_a5():
    direct = spectrum_table("A(1,4)u")     # SL2(4)
    quotiented = spectrum_table("A(1,5)")  # PSL2(5) via SL2(5) mod center
    assert direct.size == quotiented.size == 60
    assert direct.spectrum == quotiented.spectrum == (1, 2, 3, 5)


def test_two_models_of_l2_7():
    a = spectrum_table("A(2,2)u")  # SL3(2)
    b = spectrum_table("A(1,7)")   # PSL2(7)
    assert a.size == b.size == 168
    assert a.spectrum == b.spectrum == (1, 2, 3, 4, 7)
    assert a.order_histogram == b.order_histogram


def test_sp4_2():
    t = spectrum_table("C(2,2)u")
    assert t.size == 720
    assert t.spectrum == (1, 2, 3, 4, 5, 6)


def test_su_small():
    t = spectrum_table("2A(2,2)u")
    assert t.size == 216 and t.spectrum == (1, 2, 3, 4, 6, 12)
    t = spectrum_table("2A(2,2)")
    assert t.size == 72 and t.spectrum == (1, 2, 3, 4)
    t = spectrum_table("2A(2,3)u")
    assert t.size == 6048
    assert t.spectrum == (1, 2, 3, 4, 6, 7, 8, 12)


def test_su4_2():
    t = spectrum_table("2A(3,2)u")
    assert t.size == 25920
    assert t.spectrum == (1, 2, 3, 4, 5, 6, 9, 12)
    # trivial center: the simple version is the same group
    assert spectrum_table("2A(3,2)").spectrum == t.spectrum


def test_centers():
    assert len(center_of(classical_generators("A(1,3)u"))) == 2
    assert len(center_of(classical_generators("2A(2,2)u"))) == 3
    assert len(center_of(classical_generators("C(2,2)u"))) == 1


def test_cap_aborts_with_count():
    group = classical_generators("A(1,5)u")
    with pytest.raises(CapExceeded) as e:
        enumerate_group(group, cap=50)
    assert e.value.cap == 50
    assert 50 < e.value.found <= 120


def test_quotient_rejects_bad_center():
    g = classical_generators("A(1,3)u")
    f = g.field
    noncentral = Matrix(f, [[1, 1], [0, 1]])
    eye = Matrix.identity(f, 2)
    with pytest.raises(AssertionError):
        quotient_spectrum(g, [eye, noncentral])
    # {-I} alone is not closed under products
    minus = Matrix(f, [[2, 0], [0, 2]])
    with pytest.raises(AssertionError):
        quotient_spectrum(g, [minus])


def test_wide_key_fallback():
    # 7x7 over GF(3) needs 98 bits per matrix, beyond the u64 packing
    f = build_field(3)
    assert isinstance(_make_codec(f, 7), _VoidCodec)
    perms = [(1, 0, 2, 3), (1, 2, 3, 0)]  # generate Sym4
    gens = []
    for perm in perms:
        m = np.eye(7, dtype=np.uint16)
        m[:4, :4] = 0
        for i, j in enumerate(perm):
            m[j, i] = 1
        gens.append(Matrix(f, m))
    t = enumerate_group(MatrixGroup(f, 7, tuple(gens)))
    assert t.size == 24
    assert t.spectrum == (1, 2, 3, 4)
    assert t.order_histogram == {1: 1, 2: 9, 3: 8, 4: 6}


def test_generator_model_rejects_unknown_family():
    with pytest.raises(ValueError):
        classical_generators("G2(4)")
    with pytest.raises(ValueError):
        classical_generators(parse_group_spec("B(2,3)"))
