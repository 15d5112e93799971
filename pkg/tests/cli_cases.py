"""One invocation of every subcommand, with the input files they need."""
import json

from selfsim.domino.tileset import proper_coloring
from selfsim.gallery import builtin

TILES = [{"N": "a", "E": "b", "S": "a", "W": "b"}, {"N": "a", "E": "c", "S": "a", "W": "b"}]
PATTERNS = {"colors": [0, 1], "radius": 2, "labels": ["t"],
            "patterns": [{"1": 1, "t": 1}, {"t*t": 0, "1": 0}]}
GRAPH = {"vertices": [0, 1, 2], "edges": [[0, "a", 1], [1, "a", 2], [2, "a", 0]], "root": 0}
SUNNY = ["0", "1"]


def write_inputs(d):
    files = {
        "p3": proper_coloring(3, ["a", "b", "c"]).to_json(),
        "p2t": proper_coloring(2, ["t"]).to_json(),
        "p2a": proper_coloring(2, ["a"]).to_json(),
        "tiles": TILES,
        "patterns": PATTERNS,
        "graph": GRAPH,
        "odometer": builtin("odometer").to_json(),
        "main": proper_coloring(2, ["a"]).with_seed(0).to_json(),
        "ssu": {"colors": SUNNY, "labels": ["a"],
                "triples": [["0", "a", "0"], ["0", "a", "1"], ["1", "a", "0"]]},
        "sub": {"dims": 2, "box": [2, 2], "black": [[0, 0], [1, 0], [1, 1]]},
    }
    out = {}
    for name, obj in files.items():
        path = d / f"{name}.json"
        path.write_text(json.dumps(obj))
        out[name] = str(path)
    return out


def cases(f):
    ray0 = '{"preperiod":[],"period":["0"]}'
    return [
        ["nucleus", "gallery:hanoi"],
        ["pcf", "gallery:odometer"],
        ["postcritical", "gallery:hanoi", "--level", "3"],
        ["ancestor", "gallery:hanoi"],
        ["treewidth", "gallery:odometer"],
        ["schreier", "gallery:hanoi", "--level", "2", "--kind", "tile"],
        ["schreier", f["odometer"], "--level", "3", "--format", "dot"],
        ["ball", "gallery:longrange", "--center", ray0, "--radius", "2"],
        ["treedecomp", "gallery:hanoi", "--level", "2"],
        ["decide", "gallery:hanoi", f["p3"]],
        ["decide", "gallery:odometer", f["p2t"], "--ray", ray0],
        ["tile", "gallery:hanoi", f["p3"], "--level", "2", "--count"],
        ["tile", f["graph"], f["p2a"]],
        ["compile-patterns", f["patterns"]],
        ["wang", f["tiles"], "--grid", "3x2"],
        ["compose-seeded", f["main"], f["ssu"], "--marked", "1"],
        ["localmark", "a", "--labels", "a,b"],
        ["substitution", "convert", f["sub"]],
        ["substitution", "classify", "gallery:carpet"],
        ["compose-grid", "lr_octant", f["tiles"]],
        ["verify", "lr_sunny", "--extent", "4"],
        ["gallery", "list"],
        ["gallery", "export", "lr_sunny"],
    ]
