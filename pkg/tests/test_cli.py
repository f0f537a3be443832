import json

from splitjac.explorer.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(out):
    return [line.split("\t") for line in out.splitlines() if line]


def test_count_bundled_quartic(capsys):
    code, out, _ = run(capsys, "count", "--model", "examples/quartic864.json", "--p", "7,11", "--json")
    assert code == 0
    doc = json.loads(out)
    assert [c["jacobianOrder"] for c in doc["certificates"]] == [1728, 1728]
    assert doc["certificates"][0]["counts"] == [20, 44, 284]


def test_count_bad_prime_is_a_usage_error(capsys):
    code, _, err = run(capsys, "count", "--model", "quartic864.json", "--p", "5")
    assert code == 2 and "bad reduction" in err


def test_count_reads_a_model_file(capsys, tmp_path):
    f = tmp_path / "h.json"
    f.write_text(json.dumps({"model": "hyperelliptic", "coeffs": ["1", "0", "-3", "0", "2", "0", "1"]}))
    code, out, _ = run(capsys, "count", "--model", str(f), "--p", "7")
    assert code == 0
    (table, p, counts, order), = rows(out)
    assert (table, p) == ("count", "7") and len(counts.split(",")) == 2


def test_family_rows(capsys):
    code, out, _ = run(capsys, "family", "2x8", "3", "--model", "bform")
    assert code == 0
    checks = [r for r in rows(out) if r[0] == "check"]
    assert checks and all(r[2] == "True" for r in checks)


def test_degenerate_family_parameter(capsys):
    code, _, err = run(capsys, "family", "7", "1")
    assert code == 2 and err.startswith("error")


def test_glue2_auto_skips_isomorphism_matchings(capsys):
    code, out, _ = run(capsys, "glue2", "--f", "0,-1,0,1", "--g", "0,-4,0,1", "--orientations")
    assert code == 0
    products = [r for r in rows(out) if r[0] == "product"]
    assert products and all(r[-1] == "True" for r in products)
    code, _, err = run(capsys, "glue2", "--f", "0,-1,0,1", "--g", "0,-4,0,1", "--matching", "0")
    assert code == 2 and "isomorphism" in err


def test_glue3_hyper_and_quartic(capsys):
    code, out, _ = run(capsys, "glue3", "hyper", "--e1", "4,-6,1", "--e2", "4,-1,1", "--e3", "4,5/3,1")
    assert code == 0 and rows(out)[0] == ["T", "0"]
    code, out, _ = run(capsys, "glue3", "quartic", "--e1", "2x8,2,1", "--e2", "2x8,2,1", "--e3", "2x8,2,1")
    assert code == 0
    assert all(r[-1] == "True" for r in rows(out) if r[0] == "product")
    code, _, _ = run(capsys, "glue3", "hyper", "--e1", "2x8,2,-1", "--e2", "2x8,2,-1", "--e3", "2x8,2,-1")
    assert code == 2


def test_iota_halving_and_structure(capsys):
    code, out, _ = run(capsys, "iota", "2x8,3")
    assert code == 0 and rows(out)[0][0] == "iota"
    code, out, _ = run(capsys, "halving", "--e", "2x8,3", "--f", "2x8,3")
    assert code == 0 and rows(out) == [["halving", "True"]]
    code, out, _ = run(capsys, "image-structure", "--ge", "2,6", "--gf", "2,8")
    assert rows(out) == [["structure", "Z/2 x Z/24", "48"]]


def test_search_square(capsys):
    code, out, _ = run(capsys, "search", "square", "--coeffs", "1,0,0,0,1", "--height", "6")
    assert code == 0 and rows(out) == [["solution", "0", "1"]]
    code, _, _ = run(capsys, "search", "square")
    assert code == 2


def test_verify_one_example_with_figures(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "torsion63", "--primes", "5,7", "--figures", str(tmp_path))
    assert code == 0
    facts = [r for r in rows(out) if r[0] == "fact"]
    assert facts and all(r[3] == "PASS" for r in facts)
    names = {p.name for p in tmp_path.iterdir()}
    assert "fact.tsv" in names and any(n.endswith(".png") for n in names)
    assert (tmp_path / "fact.tsv").read_text().count("\n") == len(facts)


def test_flags_work_on_either_side_of_the_subcommand(capsys):
    a = run(capsys, "--json", "image-structure", "--ge", "2,6", "--gf", "2,6")
    b = run(capsys, "image-structure", "--ge", "2,6", "--gf", "2,6", "--json")
    assert a == b and json.loads(a[1])


def test_usage_errors(capsys):
    assert run(capsys, "verify", "nonexistent")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "glue2", "--f", "x,y", "--g", "1")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_failed_check_exits_with_one(capsys):
    # a genus-3 curve treated as genus 1 gives an order outside the Weil interval
    code, _, err = run(capsys, "count", "--model", "quartic864.json", "--p", "7", "--genus", "1")
    assert code == 1 and "Weil" in err
