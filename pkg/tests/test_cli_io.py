import json

import pytest

from halin_ola import (
    InvalidSubstrate,
    Layout,
    ParseError,
    SchemaVersionUnsupported,
    export_dot,
    gen_wheel,
    instance_metadata,
    parse_instance,
    parse_layout,
    serialize_instance,
    serialize_layout,
)
from halin_ola.cli import main


class TestInstanceFormat:
    def test_round_trip(self):
        h = gen_wheel(4)
        data = serialize_instance(h)
        again = parse_instance(data)
        assert again.tree.children == h.tree.children
        assert again.cycle_order == h.cycle_order
        assert serialize_instance(again) == data

    def test_metadata_preserved_in_round_trip(self):
        h = gen_wheel(3)
        data = serialize_instance(h, metadata={"name": "k4"})
        assert instance_metadata(data) == {"name": "k4"}
        assert serialize_instance(parse_instance(data), metadata={"name": "k4"}) == data

    def test_truncated_file(self):
        with pytest.raises(ParseError):
            parse_instance(b'{"schemaVersion": 1, "tree":')

    def test_unsupported_schema_version(self):
        with pytest.raises(SchemaVersionUnsupported):
            parse_instance(b'{"schemaVersion": 99, "tree": {"root": 0, "children": {}}}')

    def test_unknown_field_strict_vs_lax(self):
        doc = json.loads(serialize_instance(gen_wheel(3)).decode())
        doc["surprise"] = 1
        data = json.dumps(doc).encode()
        with pytest.raises(ParseError):
            parse_instance(data)
        assert parse_instance(data, strict=False).n == 4

    def test_cycle_never_trusted(self):
        # files carry no cycle; it is recomputed from the embedding
        data = serialize_instance(gen_wheel(3))
        assert b"cycle" not in data

    def test_invalid_substrate_rejected(self):
        data = json.dumps(
            {"schemaVersion": 1, "tree": {"root": 0, "children": {"0": [1, 2]}}}
        ).encode()
        with pytest.raises(InvalidSubstrate):
            parse_instance(data)


class TestLayoutFormat:
    def test_round_trip(self):
        lay = Layout((2, 0, 1, 3))
        assert parse_layout(serialize_layout(lay)) == lay

    def test_non_permutation_rejected(self):
        with pytest.raises(ParseError):
            parse_layout(b'{"schemaVersion": 1, "vertexAt": [0, 0, 1]}')


class TestDot:
    def test_k4_edge_styles(self):
        text = export_dot(gen_wheel(3))
        assert text.count("style=dashed") == 3
        assert text.count("style=bold") == 3
        assert "label=" not in text

    def test_layout_labels(self):
        h = gen_wheel(4)
        text = export_dot(h, Layout((1, 2, 0, 3, 4)))
        assert '0 [label="0:3"];' in text
        assert '1 [label="1:1"];' in text


class TestCliPipeline:
    def test_gen_solve_verify(self, tmp_path):
        inst = tmp_path / "k4.json"
        lay = tmp_path / "k4.layout.json"
        assert main(["gen", "--family", "wheel", "--spokes", "3", "-o", str(inst)]) == 0
        assert main(
            ["solve", "--method", "rearrange", "-i", str(inst), "-o", str(lay)]
        ) == 0
        assert main(["verify", "-i", str(inst), "-l", str(lay), "--oracle"]) == 0

    def test_solve_methods_agree(self, tmp_path, capsys):
        inst = tmp_path / "w5.json"
        main(["gen", "--family", "wheel", "--spokes", "4", "-o", str(inst)])
        costs = {}
        for method in ("oracle", "rearrange", "direct"):
            out = tmp_path / f"{method}.json"
            assert main(["solve", "--method", method, "-i", str(inst), "-o", str(out)]) == 0
            costs[method] = capsys.readouterr().out
        assert all("total=14" in text for text in costs.values())

    def test_cost_and_bound(self, tmp_path, capsys):
        inst = tmp_path / "w5.json"
        lay = tmp_path / "w5.layout.json"
        main(["gen", "--family", "wheel", "--spokes", "4", "-o", str(inst)])
        main(["solve", "--method", "direct", "-i", str(inst), "-o", str(lay)])
        capsys.readouterr()
        assert main(["cost", "-i", str(inst), "-l", str(lay)]) == 0
        assert "total=14 tree=6 cycle=8" in capsys.readouterr().out
        assert main(["bound", "-i", str(inst), "--oracle"]) == 0
        assert capsys.readouterr().out.strip() == "14"

    def test_verify_exit_3_on_suboptimal(self, tmp_path):
        inst = tmp_path / "w5.json"
        bad = tmp_path / "bad.layout.json"
        main(["gen", "--family", "wheel", "--spokes", "4", "-o", str(inst)])
        bad.write_bytes(serialize_layout(Layout((0, 1, 2, 3, 4))))  # hub first
        assert main(["verify", "-i", str(inst), "-l", str(bad), "--oracle"]) == 3

    def test_missing_file_exit_2(self, tmp_path):
        assert main(
            ["solve", "--method", "direct", "-i", str(tmp_path / "nope.json"),
             "-o", str(tmp_path / "x.json")]
        ) == 2

    def test_usage_exit_1(self, tmp_path):
        assert main(["gen", "--family", "wheel", "-o", str(tmp_path / "x.json")]) == 1
        assert main(
            ["gen", "--family", "wheel", "--spokes", "2", "-o", str(tmp_path / "x")]
        ) == 1

    def test_json_diagnostics_on_stderr(self, tmp_path, capsys):
        code = main(
            ["--json", "gen", "--family", "wheel", "--spokes", "2",
             "-o", str(tmp_path / "x")]
        )
        assert code == 1
        err = capsys.readouterr().err
        payload = json.loads(err.strip().splitlines()[-1])
        assert payload["error"] == "BadParam"
        assert payload["exitCode"] == 1

    def test_files_round_trip_byte_exact(self, tmp_path):
        inst = tmp_path / "r.json"
        main(["gen", "--family", "random", "--n", "8", "--seed", "5", "-o", str(inst)])
        data = inst.read_bytes()
        h = parse_instance(data)
        meta = instance_metadata(data)
        assert serialize_instance(h, metadata=meta) == data

    def test_export_dot_cli(self, tmp_path):
        inst = tmp_path / "k4.json"
        dot = tmp_path / "k4.dot"
        main(["gen", "--family", "wheel", "--spokes", "3", "-o", str(inst)])
        assert main(["export-dot", "-i", str(inst), "-o", str(dot)]) == 0
        assert dot.read_text().startswith("graph halin {")

    def test_proptest_small_corpus(self, capsys):
        assert main(["proptest", "--corpus", "wheel=3..4"]) == 0
        out = capsys.readouterr().out
        assert "overall: PASS" in out

    def test_rearrange_with_explicit_tree_layout(self, tmp_path):
        from halin_ola import rbt_ola, scramble_tree_ola

        inst = tmp_path / "t.json"
        tl = tmp_path / "tree.layout.json"
        out = tmp_path / "out.layout.json"
        main(["gen", "--family", "kary", "--k", "3", "--c", "2", "--h", "2",
              "-o", str(inst)])
        h = parse_instance(inst.read_bytes())
        scrambled = scramble_tree_ola(h.tree, rbt_ola(h.tree), seed=3)
        tl.write_bytes(serialize_layout(scrambled))
        assert main(
            ["solve", "--method", "rearrange", "-i", str(inst), "-t", str(tl),
             "-o", str(out)]
        ) == 0
        assert main(["verify", "-i", str(inst), "-l", str(out), "--oracle"]) == 0
