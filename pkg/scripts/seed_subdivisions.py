"""
Generate the bundled example data.
This writes the octahedron subdivisions and a few bases files under data/.
"""
from pathlib import Path
import sys

project_root = Path(__file__).parent.parent.absolute()
sys.path.insert(0, str(project_root))

from matroid_csm.models.schemas import BasesDocument, SubdivisionDocument
from matroid_csm.services.catalog import graphic_complete, non_fano, octahedron_subdivisions


def bases_document(matroid) -> BasesDocument:
    return BasesDocument(size=matroid.size, bases=matroid.to_sets())


def create_subdivisions():
    """Write one subdivision file per split of the octahedron."""
    target = Path("data/subdivisions")
    target.mkdir(parents=True, exist_ok=True)

    splits = octahedron_subdivisions()
    for name, subdivision in splits.items():
        document = SubdivisionDocument(
            parent="uniform:2,4",
            cells=[bases_document(cell) for cell in subdivision.cells],
        )
        filename = "octahedron_" + name.split(":")[1].replace("|", "_") + ".json"
        (target / filename).write_text(document.model_dump_json(indent=2) + "\n")
        print(f"✓ Created {target / filename}")
    print(f"Wrote {len(splits)} subdivisions")


def create_matroids():
    """Write bases files for matroids that are handy to pass with --bases-file."""
    target = Path("data/matroids")
    target.mkdir(parents=True, exist_ok=True)

    for filename, matroid in (("k4.json", graphic_complete(4)), ("nonfano.json", non_fano())):
        (target / filename).write_text(bases_document(matroid).model_dump_json(indent=2) + "\n")
        print(f"✓ Created {target / filename} ({len(matroid.bases)} bases)")


if __name__ == "__main__":
    print("Seeding example data...")
    print("==================================================")
    create_subdivisions()
    create_matroids()
