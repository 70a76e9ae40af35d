# scripts/export_census.py
# this utility script runs the brute-force censuses and writes them as csv
# files under data/, one file per genus and kind. existing files are kept
# unless --overwrite is given.

import argparse
import sys
from pathlib import Path

# add project root to python's path so the analyzers import cleanly
sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from analyzers.map_enumerator import count_bivariate, count_univariate, enumerate_4valent_bicolorable
from models.count_table import CountTable
from models.errors import ResourceLimit

# define the path to the data directory relative to the script location
DATA_DIR = Path(__file__).parent.parent / "data"


def write_table(table: CountTable, file_path: Path, overwrite: bool = False) -> bool:
    """writes one census as csv; returns whether the file was written"""
    if file_path.exists() and not overwrite:
        print(f"-> skipping '{file_path.name}', file already exists.")
        return False
    file_path.parent.mkdir(parents=True, exist_ok=True)
    table.to_dataframe().to_csv(file_path, index=False)
    print(f"✅ wrote '{file_path.name}' ({len(table.rows())} rows, total {table.total})")
    return True


def export(genera: list[int], max_edges: int, data_dir: Path = DATA_DIR, overwrite: bool = False) -> list[Path]:
    written = []
    for g in genera:
        print(f"🔍 genus {g} up to {max_edges} edges...")
        tables = {
            f"rooted_maps_g{g}_by_edges.csv": count_univariate(g, max_edges),
            f"rooted_maps_g{g}_by_vertices_faces.csv": count_bivariate(g, max_edges),
        }
        bc4 = CountTable(g, ("F_black", "F_white"))
        for n in range(1, max_edges // 2 + 1):
            bc4 = bc4.merge(enumerate_4valent_bicolorable(g, n))
        tables[f"bicolorable_4valent_g{g}_by_face_colors.csv"] = bc4
        for name, table in tables.items():
            if write_table(table, data_dir / name, overwrite):
                written.append(data_dir / name)
    return written


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="export rooted map censuses as csv files under data/")
    parser.add_argument("--genus", type=int, nargs="+", default=[0, 1], help="genera to export")
    parser.add_argument("--max-edges", type=int, default=4, help="largest edge count")
    parser.add_argument("--overwrite", action="store_true", help="replace existing files")
    parser.add_argument("--data-dir", type=Path, default=DATA_DIR)
    args = parser.parse_args(argv)

    if args.max_edges > config.max_edges:
        print(f"❌ --max-edges {args.max_edges} exceeds the configured bound of {config.max_edges}")
        return 2
    try:
        export(args.genus, args.max_edges, args.data_dir, args.overwrite)
    except ResourceLimit as e:
        print(f"❌ resource limit: {e}")
        return 2
    print("\n📝 done.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
