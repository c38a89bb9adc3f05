"""Regenerates the SMILES fixtures with RDKit as an independent oracle.

Spelling pairs are random (non-canonical) SMILES of the same RDKit molecule,
so they encode the same graph by construction.

    python3 tests/fixtures/gen/make_chem_fixtures.py
"""
import pathlib
import random

from rdkit import Chem

OUT = pathlib.Path(__file__).resolve().parents[1]

SOURCES = [
    "CCO", "CC(=O)O", "CC(=O)Oc1ccccc1C(=O)O", "CN1C=NC2=C1C(=O)N(C(=O)N2C)C",
    "c1ccc2ccccc2c1", "c1ccc(cc1)C(=O)Cl", "O=C(O)CCC(=O)O", "CC(C)Cc1ccc(cc1)C(C)C(=O)O",
    "c1ccncc1", "c1cc[nH]c1", "c1ccc2[nH]ccc2c1", "OC1CCCCC1", "C1CCOC1", "ClCCl",
    "BrCCBr", "CC#N", "C=CC(=O)OC", "CC(C)(C)OC(=O)N", "NCC(=O)O", "CC(N)C(=O)O",
    "CC(C)C(N)C(=O)O", "O=C1CCCN1", "c1ccc(cc1)N", "c1ccc(cc1)O", "Oc1ccc(Cl)cc1",
    "CS(C)=O", "CN(C)C=O", "O=S(=O)(O)O", "[O-][N+](=O)c1ccccc1", "C[N+](C)(C)C",
    "OP(=O)(O)O", "FC(F)(F)c1ccccc1", "Ic1ccccc1", "c1ccsc1", "c1ccoc1", "C1CC1",
    "C1CCC2CCCCC2C1", "C12CC3CC(C1)CC(C3)C2", "CCOC(=O)CC(=O)OCC", "O=Cc1ccccc1",
    "CC(=O)Nc1ccc(O)cc1", "COc1ccc(CC(=O)O)cc1", "N#Cc1ccccc1", "c1ccc2c(c1)oc1ccccc12",
    "O=C(OCc1ccccc1)NCC(=O)O", "CC(C)(C)OC(=O)NC(C)C(=O)O", "B(O)(O)c1ccccc1",
    "C1=CC=CC=C1", "OCC(O)CO", "[Na+].[Cl-]",
]

MALFORMED = [
    ("C1CC", "UnmatchedRing"),
    ("c1cccc", "UnmatchedRing"),
    ("CC(C", "UnbalancedParen"),
    ("CC)C", "UnbalancedParen"),
    ("C(C(C)", "UnbalancedParen"),
    ("CXC", "UnknownAtomSymbol"),
    ("[Zz]", "UnknownAtomSymbol"),
    ("Cx", "UnknownAtomSymbol"),
    ("", "EmptyInput"),
    ("   ", "EmptyInput"),
    ("C=", "InvalidSmiles"),
    ("C==C", "InvalidSmiles"),
    ("[CH3", "InvalidSmiles"),
    ("C11", "InvalidSmiles"),
]


def main() -> None:
    rng = random.Random(20260101)
    mols = []
    for s in SOURCES:
        m = Chem.MolFromSmiles(s)
        assert m is not None, s
        mols.append(m)

    canon = [Chem.MolToSmiles(m) for m in mols]
    assert len(set(canon)) == len(canon), "corpus must hold distinct molecules"
    (OUT / "smiles_corpus.txt").write_text("\n".join(canon) + "\n")

    # Highly symmetric molecules get hand-written alternatives.
    manual = {"C1CC1": "C(C1)C1", "c1ccccc1": "c%10ccc(cc%10)"}
    lines = []
    for m, c in zip(mols, canon):
        if c in manual:
            alt = manual[c]
        elif m.GetNumAtoms() == 1:
            alt = c
        else:
            alt = c
            for _ in range(50):
                Chem.rdBase.SeedRandomNumberGenerator(rng.randrange(1 << 30))
                alt = Chem.MolToSmiles(m, canonical=False, doRandom=True)
                if alt != c:
                    break
        assert Chem.MolToSmiles(Chem.MolFromSmiles(alt)) == c
        lines.append(f"{c}\t{alt}")
    (OUT / "smiles_spelling_pairs.tsv").write_text("\n".join(lines) + "\n")

    (OUT / "smiles_malformed.tsv").write_text(
        "".join(f"{s}\t{code}\n" for s, code in MALFORMED))


if __name__ == "__main__":
    main()
