"""Figure recipes: which simulator outputs feed which panels, with pinned hashes.

A recipe references CSV files written by the qpinem CLI together with the
sha256 hashes recorded in their JSON sidecars at pin time. Rendering
refuses to run if any referenced file has drifted from its pinned hash,
so a figure can never silently mix stale and fresh data.
"""

import hashlib
import json
from pathlib import Path

# figure id -> for each input slot: (sidecar name, [csv file names])
_SPECS = {
    "fig1b": {
        "map": ("fig1b_map.json", ["fig1b_map_classical.csv"]),
    },
    "fig2": {
        "maps": ("fig2_map.json", [
            "fig2_map_classical.csv", "fig2_map_mpu.csv",
            "fig2_map_phase.csv", "fig2_map_amplitude.csv",
        ]),
        "fwhm": ("fig2e_fwhm.json", ["fig2e_fwhm.csv"]),
        "fwhm_beta": ("fig2f_fwhm.json", ["fig2f_fwhm.csv"]),
    },
    "fig3": {
        "profiles": ("fig3_map.json", ["fig3_map_classical.csv", "fig3_map_amplitude.csv"]),
        "beta_maps": ("fig3d_map.json", [
            "fig3d_map_beta2.csv", "fig3d_map_beta3.csv",
            "fig3d_map_beta4.csv", "fig3d_map_beta5.csv",
        ]),
    },
    "fig4": {
        "dmatrix": ("fig4_dmatrix.json", [
            f"fig4_dmatrix_{label}_{part}.csv"
            for label in ("classical", "mpu", "phase", "amplitude")
            for part in ("re", "im")
        ]),
    },
    "fig5": {
        "delta": ("fig5_delta.json", [
            f"fig5_delta_{label}.csv"
            for label in ("classical", "amplitude", "phase", "mpu")
        ]),
    },
}

FIGURE_IDS = tuple(_SPECS)


class RecipeError(Exception):
    pass


class StaleDataError(RecipeError):
    pass


def sha256_file(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def pin_recipe(figure: str, data_dir, output_image) -> dict:
    """Build a recipe for `figure`, pinning every input to its sidecar hash."""
    if figure not in _SPECS:
        raise RecipeError(f"unknown figure {figure!r}; known: {', '.join(FIGURE_IDS)}")
    data_dir = Path(data_dir)
    inputs = {}
    for slot, (sidecar_name, csv_names) in _SPECS[figure].items():
        sidecar_path = data_dir / sidecar_name
        if not sidecar_path.exists():
            raise RecipeError(f"missing sidecar {sidecar_path}; run the simulator first")
        sidecar = json.loads(sidecar_path.read_text())
        files = []
        for name in csv_names:
            path = data_dir / name
            if not path.exists():
                raise RecipeError(f"missing data file {path}")
            recorded = sidecar.get("files", {}).get(name, {}).get("sha256")
            if recorded is None:
                raise RecipeError(f"sidecar {sidecar_name} does not list {name}")
            actual = sha256_file(path)
            if actual != recorded:
                raise StaleDataError(
                    f"{name}: content hash {actual[:12]} does not match its sidecar "
                    f"({recorded[:12]}); regenerate the data"
                )
            files.append({"path": name, "sha256": recorded})
        inputs[slot] = {"sidecar": sidecar_name, "files": files,
                        "axes": sidecar.get("axes", {}), "extra": sidecar.get("extra", {})}
    return {
        "figure": figure,
        "data_dir": str(data_dir),
        "output": str(output_image),
        "color_scale": "per-panel-max",
        "inputs": inputs,
    }


def save_recipe(recipe: dict, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(recipe, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_recipe(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        recipe = json.load(fh)
    for key in ("figure", "data_dir", "output", "inputs"):
        if key not in recipe:
            raise RecipeError(f"recipe is missing {key!r}")
    return recipe


def verify_recipe(recipe: dict) -> None:
    """Re-hash every referenced file against its pin; raise naming the first drift."""
    data_dir = Path(recipe["data_dir"])
    for slot in recipe["inputs"].values():
        for entry in slot["files"]:
            path = data_dir / entry["path"]
            if not path.exists():
                raise StaleDataError(f"{entry['path']}: referenced file is missing")
            actual = sha256_file(path)
            if actual != entry["sha256"]:
                raise StaleDataError(
                    f"{entry['path']}: content hash {actual[:12]} does not match the "
                    f"recipe pin ({entry['sha256'][:12]}); repin or regenerate"
                )
