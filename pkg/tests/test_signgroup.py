"""The coordinate sign group and the 16 field-function symmetries."""

from itertools import product

import pytest

from csym.exact import ExactMatrix
from csym.signgroup import (
    BLOCKS,
    CANONICAL_SIXTEEN,
    PHYSICAL_SLOTS,
    FieldOperator,
    alpha_matrices,
    build_field_operators,
    classical_conjugation_operator,
    classify_group,
    enumerate_distinct,
    generate_g8,
    reduce_product,
    verify_relations,
)


class TestSignMatrixGroup:
    def test_generators(self):
        mats = alpha_matrices()
        ident = ExactMatrix.identity(5)
        for name in ("T", "P", "Q"):
            assert mats[name] @ mats[name] == ident

    def test_order_eight(self):
        assert generate_g8().order == 8

    def test_structure_by_exhaustion(self):
        # independent of classify_group: walk the table directly
        table = generate_g8()
        for name in table.elements:
            k, cur = 1, name
            while cur != "E":
                cur = table.compose[(cur, name)]
                k += 1
            assert k in (1, 2)
        for a in table.elements:
            for b in table.elements:
                assert table.compose[(a, b)] == table.compose[(b, a)]

    def test_classify(self):
        s = classify_group(generate_g8())
        assert s.is_abelian
        assert not s.is_cyclic
        assert s.all_involutions
        assert sorted(s.element_orders.values()) == [1] + [2] * 7

    def test_trivial_group_is_cyclic(self):
        from csym.signgroup import GroupTable

        t = GroupTable(
            elements={"E": ExactMatrix.identity(1)}, compose={("E", "E"): "E"}
        )
        assert classify_group(t).is_cyclic

    def test_composition_example(self):
        # (TP)(PQ) = TQ since P squares away
        table = generate_g8()
        assert table.compose[("TP", "PQ")] == "TQ"


class TestFieldOperators:
    def test_defining_rows(self):
        ops = build_field_operators()
        t1 = ops["T1"]
        assert t1.arg_sig == (-1, 1, 1) and not t1.charge_flip
        for blk, sign in (("E", 1), ("H", -1), ("rho", 1), ("J", -1), ("phi", 1), ("A", -1)):
            assert all(t1.comp_signs[i] == sign for i in BLOCKS[blk])
        q2 = ops["Q2"]
        assert q2.arg_sig == (1, 1, -1) and not q2.charge_flip
        assert all(s == 1 for s in q2.comp_signs)
        q1 = ops["Q1"]
        assert q1.charge_flip
        assert all(q1.comp_signs[i] == -1 for i in PHYSICAL_SLOTS)
        assert ops["E"].is_identity()

    def test_zero_slots_canonicalized(self):
        signs = [1] * 16
        signs[0] = -1
        signs[4] = -1
        op = FieldOperator("probe", (1, 1, 1), tuple(signs), False)
        assert op.comp_signs[0] == 1 and op.comp_signs[4] == 1

    def test_every_operator_self_inverse(self):
        for op in build_field_operators().values():
            assert op.compose(op).is_identity()

    def test_relations(self):
        assert all(r.holds for r in verify_relations())

    def test_pair_products_equal(self):
        ops = build_field_operators()
        p1p2 = ops["P1"].compose(ops["P2"])
        t1t2 = ops["T1"].compose(ops["T2"])
        q1q2 = ops["Q1"].compose(ops["Q2"])
        assert p1p2.same_action(t1t2) and t1t2.same_action(q1q2)

    def test_sixteen_distinct(self):
        canon, name_map = enumerate_distinct()
        assert len(canon) == 16
        assert set(canon) == set(CANONICAL_SIXTEEN)
        assert len({op.signature() for op in canon.values()}) == 16
        assert len(name_map) == 64
        assert set(name_map.values()) <= set(CANONICAL_SIXTEEN)

    def test_brute_force_count(self):
        # independent exhaustive count over raw signatures
        ops = build_field_operators()
        six = ["P1", "P2", "T1", "T2", "Q1", "Q2"]
        seen = set()
        for bits in product((0, 1), repeat=6):
            op = ops["E"]
            for b, n in zip(bits, six):
                if b:
                    op = op.compose(ops[n])
            seen.add(op.signature())
        assert len(seen) == 16

    def test_worked_collapses(self):
        assert reduce_product(("P1", "Q1", "Q2")) == "P2"
        assert reduce_product(("P1", "P2", "T1", "T2")) == "E"
        assert reduce_product(("P1", "P2", "T1", "T2", "Q1", "Q2")) == "Q1Q2"

    def test_composition_commutative(self):
        canon, _ = enumerate_distinct()
        ops = list(canon.values())[:8]
        for a in ops:
            for b in ops:
                assert a.compose(b).same_action(b.compose(a))

    def test_classical_conjugation_composite(self):
        ce = classical_conjugation_operator()
        assert ce.arg_sig == (1, 1, 1)
        assert ce.charge_flip
        assert all(ce.comp_signs[i] == -1 for i in PHYSICAL_SLOTS)

    def test_as_matrix_roundtrip(self):
        op = build_field_operators()["P1"]
        m = op.as_matrix()
        assert m.shape == (16, 16)
        phi = list(range(16))
        assert op.apply(phi) == [
            int(m[i, i].re) * v for i, v in enumerate(phi)
        ]

    def test_apply_rejects_wrong_length(self):
        with pytest.raises(ValueError, match="16"):
            build_field_operators()["P1"].apply([1, 2, 3])
