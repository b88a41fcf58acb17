from ramcc.paths import PathManagement
from ramcc.formats.document import readDocument
from ramcc.formats.instances import buildInstance
from ramcc.ramification.galois import GaloisElement, GaloisGroup


def elementaryAbelian(rank: int) -> GaloisGroup:
    """(Z/2)^rank with σ_i∘σ_j = σ_{i xor j}."""
    n = 2**rank
    elements = [GaloisElement(i, None, None if i == 0 else 1) for i in range(n)]
    return GaloisGroup(elements, [[i ^ j for j in range(n)] for i in range(n)])


def test_subgroups_of_a_three_generated_group():
    G = elementaryAbelian(3)
    subgroups = G.subgroupsContaining([0])
    assert len(subgroups) == 1 + 7 + 7 + 1
    assert subgroups[0] == (0,)
    assert subgroups[-1] == tuple(range(8))
    assert all(G.isSubgroup(H) for H in subgroups)

    above = G.subgroupsContaining([1])
    assert [len(H) for H in above] == [2, 4, 4, 4, 8]
    assert all(1 in H for H in above)


def test_subgroups_of_the_corpus_groups():
    D = buildInstance(readDocument(PathManagement.corpusDocument("anchor-p3"))).data
    assert D.group.subgroupsContaining([0]) == [(0,), (0, 1, 2)]

    D = buildInstance(readDocument(PathManagement.corpusDocument("two-jump-p2-regular"))).data
    assert len(D.group.subgroupsContaining([0])) == 5
    assert len(D.group.subgroupsContaining(D.wild)) == 2
