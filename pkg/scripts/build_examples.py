"""Regenerate src/rrbgroups/data/*.json from the catalog."""

from pathlib import Path

from rrbgroups import catalog, io

out = Path(__file__).resolve().parents[1] / "src" / "rrbgroups" / "data"
out.mkdir(exist_ok=True)
for name, doc in catalog.example_documents().items():
    io.dump(doc, out / f"{name}.json")
    print("wrote", name)
