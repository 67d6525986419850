"""Tour of the two hardness-reduction gadget families and their witness
converters.

Run with:  python demos/gadget_tour.py
"""

from treepart import (
    Graph,
    TcmisInstance,
    TreePartition,
    gen_domino_reduction,
    gen_tcmis_gadget,
    tcmis_witness_to_partition,
    tp_witness_to_domino,
    verify_domino,
    verify_tp,
)


def tcmis_demo():
    # two tree nodes, one color, two members per class, and one conflict
    # edge joining member 1 of each class
    inst = TcmisInstance(
        tree_n=2,
        tree_edges=[(0, 1)],
        k=1,
        r=2,
        edges=[((0, 1, 1), (1, 1, 1))],
    )
    gad = gen_tcmis_gadget(inst)
    print(f"compiled instance: {gad.h.n} vertices, {gad.h.m} edges, "
          f"target width L={gad.big_l}")

    good = tcmis_witness_to_partition(gad, {(0, 1): 2, (1, 1): 2})
    print(f"independent witness: width {verify_tp(gad.h, good.tp)}, "
          f"overflow nodes {good.overflow}")

    bad = tcmis_witness_to_partition(gad, {(0, 1): 1, (1, 1): 1})
    print(f"conflicting witness: width {verify_tp(gad.h, bad.tp)}, "
          f"overflow localizes at checkpoint nodes {bad.overflow} "
          f"(expected {sorted(gad.markers)})")
    print()


def domino_demo():
    triangle = Graph(3, [(0, 1), (1, 2), (0, 2)])
    h, reg = gen_domino_reduction(triangle, k=2)
    print(f"domino host for the triangle at k=2: {h.n} vertices, "
          f"L={reg.big_l}, M={reg.big_m}")
    witness = TreePartition([[0, 1], [2]], [(0, 1)], root=0)
    td = tp_witness_to_domino(triangle, 2, witness, reg)
    print(f"converted witness: domino width {verify_domino(h, td)} "
          f"(bound M-1 = {reg.big_m - 1})")


if __name__ == "__main__":
    tcmis_demo()
    domino_demo()
