import pytest

from ramcc.paths import PathManagement
from ramcc.algebra.ratfun import RationalFunction
from ramcc.formats.document import parseDocument, readDocument, formatDocument, VerticalLine
from ramcc.errors import ParseError


ANCHOR = """# f = T^3 - t^2*T - x
[field]
p = 3

[extension]
n = 1
a0 = -x
a1 = -t^2
"""


@pytest.mark.parametrize("path", PathManagement.corpusDocuments(), ids=lambda path: path.stem)
def test_corpus_is_a_printing_fixpoint(path):
    document = readDocument(path)
    assert document.source == path.name
    text = formatDocument(document)
    assert formatDocument(parseDocument(text)) == text


def test_extension_block():
    document = parseDocument(ANCHOR)
    assert document.p == 3 and document.precision is None
    a0, a1, a2 = document.extension.coefficients
    assert a0.toString() == "-x"
    assert a1.valuation() == 2
    assert a2.isEmpty()
    assert document.representation is None and document.triple is None


def test_representation_block():
    document = readDocument(PathManagement.corpusDocument("two-jump-p2-regular"))
    assert document.representation.preset == "induced"
    assert document.representation.induced == ((1, (0,), (0,)),)

    document = parseDocument(ANCHOR + "[representation]\ncharacter = 2 * [0, 1, 2]\ncharacter = -1 * [0, 2, 1]\n")
    assert document.representation.preset is None
    assert document.representation.characters == ((2, (0, 1, 2)), (-1, (0, 2, 1)))


def test_triple_block():
    document = readDocument(PathManagement.corpusDocument("punctured-disc"))
    triple = document.triple
    assert (triple.delta, triple.rank, triple.psi0) == (0, 1, 0)
    assert triple.horizontal == ((1, 0, 1),)
    assert triple.vertical == (VerticalLine("unramified", (0, 1)),)


def test_abstract_block():
    document = readDocument(PathManagement.corpusDocument("anchor-p3-abstract"))
    block = document.abstract
    assert block.invariants == (1,)
    assert block.hbar == RationalFunction.generator(3, "u")
    assert block.conductor == 3
    assert [(coordinates, jump, unit.toString()) for coordinates, jump, unit in block.elements] == [((1,), 1, "-1"), ((2,), 1, "1")]


def test_missing_constant_coefficient():
    with pytest.raises(ParseError) as error:
        parseDocument("[field]\np = 3\n\n[extension]\nn = 1\na1 = -t^2\n")
    assert error.value.line == 4
    assert "a0" in error.value.expected


def test_errors_are_positioned():
    with pytest.raises(ParseError) as error:
        parseDocument("[field]\np = 3\n[extension]\nn = 1\na0 = -x +\n")
    assert (error.value.line, error.value.col) == (5, 10)

    with pytest.raises(ParseError) as error:
        parseDocument("[field]\np = 3\n[extension]\nn = 1\na0 = -x\na1 = -t^2 / (t + 1)\n")
    assert error.value.line == 6
    assert error.value.col == 11
    assert "monomial" in error.value.expected

    with pytest.raises(ParseError) as error:
        parseDocument("[field]\np = 3\n[extension]\nn = 1\na0 = -y\n")
    assert (error.value.line, error.value.col, error.value.found) == (5, 7, "y")


@pytest.mark.parametrize("text", [
    "p = 3\n",                                              # No section.
    "[extension]\nn = 1\na0 = -x\n",                        # No [field].
    "[field]\np = 3\n[fields]\n",                           # Unknown section.
    "[field]\np = 3\n[field]\np = 5\n",                     # Repeated section.
    "[field]\np = 3\np = 5\n",                              # Repeated key.
    "[field]\np = 3\nq = 5\n",                              # Unknown key.
    "[field]\np = three\n",                                 # Not an integer.
    "[field]\np = 3\n[extension]\nn = 1\na0 = -x\na3 = t\n",  # Coefficient beyond the degree.
    "[field]\np = 3\n[extension]\nn = 1\na0 = -x\nconjugates = h; h + t\n",
    "[field]\np = 3\n[representation]\npreset = everything\n",
    "[field]\np = 3\n[representation]\ninduced = ind([0, 1]; [0])\n",
    "[field]\np = 3\n[triple]\ndelta = 0\nrank = 1\npsi0 = 0\nvertical = tame 0 1\n",
    "[field]\np = 3\n[triple]\ndelta = 0\nrank = 1\npsi0 = 0\nhorizontal = 0, 0, 1\n",
    "[field]\np = 3\n[triple]\ndelta = -1\nrank = 1\npsi0 = 0\n",
    "[field]\np = 3\n[abstract]\nn = 1\ninvariants = 1\na0 = -x\nelement = 1 : 1 : unit 1\n"
])
def test_malformed_documents(text):
    with pytest.raises(ParseError):
        parseDocument(text)
