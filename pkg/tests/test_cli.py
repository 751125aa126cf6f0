"""Tests for the omgraph command-line interface."""

import orjson
import pytest
from pydantic import ValidationError

from schemas.run_config import RunConfig
from scripts.cli import app
from tests.conftest import NEGATIVE, U23
from tests.test_export import U23_DOT


class TestCheck:
    """Test the check command and its exit codes."""

    def test_pass(self, runner, write_system):
        """Exit 0 on an oriented matroid."""
        result = runner.invoke(app, ["check", str(write_system(U23))])
        assert result.exit_code == 0
        assert "pass" in result.stdout

    def test_violation(self, runner, write_system):
        """Exit 1 with the elimination witness."""
        result = runner.invoke(app, ["check", str(write_system(NEGATIVE))])
        assert result.exit_code == 1
        assert "C3" in result.stdout
        assert "e2" in result.stdout

    def test_json(self, runner, write_system):
        """Machine-readable verdict."""
        result = runner.invoke(app, ["check", str(write_system(NEGATIVE)), "--format", "json"])
        verdict = orjson.loads(result.stdout)
        assert verdict["passed"] is False
        assert verdict["violation"]["rule"] == "C3"
        assert verdict["violation"]["vectors"] == ["+0+", "0--"]
        assert verdict["violation"]["element"] == 2

    def test_generated_input(self, runner):
        """Inline generator instead of a file."""
        assert runner.invoke(app, ["check", "--gen", "u2n:4"]).exit_code == 0

    def test_missing_file(self, runner, tmp_path):
        """Unreadable input is exit 2."""
        assert runner.invoke(app, ["check", str(tmp_path / "nope.txt")]).exit_code == 2

    def test_parse_error(self, runner, write_system):
        """Bad sign characters are exit 2."""
        assert runner.invoke(app, ["check", str(write_system(["0++", "0x-"]))]).exit_code == 2

    def test_exactly_one_input(self, runner, write_system):
        """A file and --gen together, or neither, are exit 2."""
        path = str(write_system(U23))
        assert runner.invoke(app, ["check", path, "--gen", "u2n:3"]).exit_code == 2
        assert runner.invoke(app, ["check"]).exit_code == 2


class TestGraph:
    """Test the graph command."""

    def test_dot_golden(self, runner, write_system):
        """DOT is the default format."""
        result = runner.invoke(app, ["graph", str(write_system(U23))])
        assert result.exit_code == 0
        assert result.stdout == U23_DOT

    def test_deterministic(self, runner):
        """Identical output on repeated runs."""
        first = runner.invoke(app, ["graph", "--gen", "cyclic:3:5"])
        second = runner.invoke(app, ["graph", "--gen", "cyclic:3:5"])
        assert first.exit_code == 0
        assert first.stdout == second.stdout

    def test_tope_graph_json(self, runner, write_system):
        """Six topes in a cycle."""
        path = str(write_system(U23))
        result = runner.invoke(app, ["graph", path, "--kind", "tope", "--format", "json"])
        document = orjson.loads(result.stdout)
        assert document["kind"] == "tope"
        assert len(document["vertices"]) == 6
        assert len(document["edges"]) == 6

    def test_text_table(self, runner, write_system):
        """Human-readable adjacency."""
        result = runner.invoke(app, ["graph", str(write_system(U23)), "--format", "text"])
        assert result.exit_code == 0
        assert "6 vertices, 6 edges" in result.stdout

    def test_unknown_kind(self, runner, write_system):
        """Only cocircuit and tope graphs."""
        result = runner.invoke(app, ["graph", str(write_system(U23)), "--kind", "hasse"])
        assert result.exit_code == 2

    def test_covector_cap(self, runner, write_system):
        """Exceeding the closure budget is exit 3."""
        result = runner.invoke(app, ["graph", str(write_system(U23)), "--covector-cap", "5"])
        assert result.exit_code == 3


class TestVerifyTheorem:
    """Test the verify-theorem command."""

    def test_oriented_matroid(self, runner, write_system):
        """All conditions pass and agree."""
        result = runner.invoke(app, ["verify-theorem", str(write_system(U23))])
        assert result.exit_code == 0
        assert "conditions agree" in result.stdout

    def test_negative_system_agrees(self, runner, write_system):
        """Both sides fail; the conditions still agree."""
        path = str(write_system(NEGATIVE))
        result = runner.invoke(app, ["verify-theorem", path, "--format", "json"])
        assert result.exit_code == 0
        report = orjson.loads(result.stdout)
        assert report["axioms"]["passed"] is False
        assert report["crabbed_paths"]["passed"] is False
        assert report["crabbed_paths"]["violation"]["vectors"] == ["+0+", "0--"]
        assert report["agree"] is True

    def test_costs_in_report(self, runner, write_system):
        """Instrumented costs are part of the report."""
        path = str(write_system(U23))
        report = orjson.loads(
            runner.invoke(app, ["verify-theorem", path, "--format", "json"]).stdout
        )
        assert report["cost_naive"] == 72
        assert report["cocircuits"] == 6

    def test_hypothesis_not_met(self, runner, write_system):
        """(C0)-(C2) failures are exit 4."""
        path = str(write_system(["0++", "0--", "0+0", "0-0"]))
        assert runner.invoke(app, ["verify-theorem", path]).exit_code == 4

    def test_jobs_do_not_change_output(self, runner):
        """Byte-identical reports for one and several worker processes."""
        outputs = [
            runner.invoke(
                app, ["verify-theorem", "--gen", "u2n:5", "--format", "json", "--jobs", jobs]
            )
            for jobs in ("1", "3")
        ]
        assert all(result.exit_code == 0 for result in outputs)
        assert outputs[0].stdout == outputs[1].stdout


class TestBench:
    """Test the bench command."""

    def test_u2n_json(self, runner):
        """Closed-form costs, no timings unless asked."""
        result = runner.invoke(app, ["bench", "u2n", "--sizes", "2..4", "--format", "json"])
        assert result.exit_code == 0
        rows = orjson.loads(result.stdout)
        assert [row["size"] for row in rows] == [2, 3, 4]
        assert rows[0]["cost_naive"] == 0
        assert rows[0]["cost_graph"] == 16
        assert rows[2]["cost_naive"] == 384
        assert rows[2]["cost_graph"] == 168
        assert "seconds_naive" not in rows[0]

    def test_timings(self, runner):
        """Wall-clock columns on request."""
        result = runner.invoke(
            app, ["bench", "u2n", "--sizes", "3", "--timings", "--format", "json"]
        )
        assert "seconds_naive" in orjson.loads(result.stdout)[0]

    def test_cyclic_table(self, runner):
        """Text table for the cyclic family."""
        result = runner.invoke(app, ["bench", "cyclic", "--sizes", "3..4", "--rank", "3"])
        assert result.exit_code == 0
        assert "Recognition cost" in result.stdout

    def test_empty_range(self, runner):
        """No sizes, no rows."""
        result = runner.invoke(app, ["bench", "u2n", "--sizes", "5..4", "--format", "json"])
        assert result.exit_code == 0
        assert orjson.loads(result.stdout) == []

    def test_bad_arguments(self, runner):
        """Unknown family or malformed range are exit 2."""
        assert runner.invoke(app, ["bench", "simplex"]).exit_code == 2
        assert runner.invoke(app, ["bench", "u2n", "--sizes", "a..b"]).exit_code == 2

    def test_covector_cap(self, runner):
        """Closure budgets apply to every benchmarked instance."""
        result = runner.invoke(app, ["bench", "u2n", "--sizes", "4", "--covector-cap", "5"])
        assert result.exit_code == 3
        assert runner.invoke(app, ["bench", "u2n", "--covector-cap", "0"]).exit_code == 2


class TestGen:
    """Test the generator commands."""

    def test_u2n(self, runner):
        """Header plus 2n members."""
        result = runner.invoke(app, ["gen", "u2n", "3"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "# ground: e0,e1,e2"
        assert len(lines) == 7

    def test_u2n_too_small(self, runner):
        """Input errors are exit 2."""
        assert runner.invoke(app, ["gen", "u2n", "1"]).exit_code == 2

    def test_cyclic_to_file(self, runner, repository, tmp_path):
        """Output written to a file reads back."""
        path = tmp_path / "cyclic.txt"
        result = runner.invoke(app, ["gen", "cyclic", "3", "4", "--output", str(path)])
        assert result.exit_code == 0
        assert len(repository.read(path)) == 12

    def test_matrix(self, runner, tmp_path, repository, u23):
        """Cocircuits of a matrix file."""
        path = tmp_path / "u23.mat"
        path.write_text("1 0 1\n0 1 1\n")
        result = runner.invoke(app, ["gen", "matrix", str(path)])
        assert result.exit_code == 0
        assert result.stdout == repository.format(u23)

    def test_random_deterministic(self, runner):
        """Same seed, same output."""
        first = runner.invoke(app, ["gen", "random", "4", "3", "--seed", "5"])
        second = runner.invoke(app, ["gen", "random", "4", "3", "--seed", "5"])
        assert first.exit_code == 0
        assert first.stdout == second.stdout

    def test_mutate(self, runner, write_system):
        """Dropping a pair leaves four members."""
        path = str(write_system(U23))
        result = runner.invoke(app, ["gen", "mutate", path, "--kind", "drop-pair", "--seed", "1"])
        assert result.exit_code == 0
        assert len(result.stdout.splitlines()) == 5


class TestContract:
    """Test the contract command."""

    def test_contract_e0(self, runner, write_system):
        """Members vanishing on e0, restricted to e1, e2."""
        result = runner.invoke(app, ["contract", str(write_system(U23)), "--elements", "e0"])
        assert result.exit_code == 0
        assert result.stdout == "# ground: e1,e2\n++\n--\n"

    def test_unknown_label(self, runner, write_system):
        """Labels must belong to the ground set."""
        result = runner.invoke(app, ["contract", str(write_system(U23)), "--elements", "x"])
        assert result.exit_code == 2

    def test_json_keeps_origin(self, runner, write_system):
        """The JSON document maps minor elements back to the original ground set."""
        result = runner.invoke(
            app, ["contract", str(write_system(U23)), "--elements", "e0", "--format", "json"]
        )
        assert result.exit_code == 0
        document = orjson.loads(result.stdout)
        assert document == {"ground": ["e1", "e2"], "members": ["++", "--"], "origin": [1, 2]}


class TestClosureAndHull:
    """Test the closure and hull commands."""

    def test_closure_json(self, runner, write_system):
        """Thirteen covectors of rank 2."""
        path = str(write_system(U23))
        document = orjson.loads(runner.invoke(app, ["closure", path, "--format", "json"]).stdout)
        assert len(document["covectors"]) == 13
        assert document["rank"] == 2

    def test_closure_check_lattice(self, runner, write_system):
        """The diagnostic passes on U(2,3)."""
        result = runner.invoke(app, ["closure", str(write_system(U23)), "--check-lattice"])
        assert result.exit_code == 0
        assert "lattice: pass" in result.stdout

    def test_hull(self, runner, write_system):
        """[0++, +-0] has three vertices and two edges."""
        path = str(write_system(U23))
        result = runner.invoke(
            app, ["hull", path, "--vertices", "0++,+-0", "--format", "json"]
        )
        assert result.exit_code == 0
        document = orjson.loads(result.stdout)
        assert document["vertices"] == ["+0+", "+-0", "0++"]
        assert document["edges"] == [[0, 1], [0, 2]]

    def test_hull_needs_cocircuits(self, runner, write_system):
        """Generators must be vertices of the cocircuit graph."""
        result = runner.invoke(app, ["hull", str(write_system(U23)), "--vertices", "+++"])
        assert result.exit_code == 2


class TestLemmas:
    """Test the structural checks command."""

    def test_u23(self, runner, write_system):
        """Every check passes on U(2,3)."""
        result = runner.invoke(app, ["lemmas", str(write_system(U23)), "--format", "json"])
        assert result.exit_code == 0
        verdicts = orjson.loads(result.stdout)
        assert all(verdict["passed"] for verdict in verdicts)

    def test_non_uniform_skips_neighbor_check(self, runner, tmp_path):
        """Parallel columns: the neighbor check is skipped with a warning."""
        path = tmp_path / "parallel.mat"
        path.write_text("1 0 1\n0 1 0\n")
        system_path = tmp_path / "parallel.txt"
        runner.invoke(app, ["gen", "matrix", str(path), "--output", str(system_path)])
        result = runner.invoke(app, ["lemmas", str(system_path), "--format", "json"])
        assert result.exit_code == 0
        neighbors = orjson.loads(result.stdout)[-1]
        assert neighbors["check"] == "uniform-neighbors"
        assert neighbors["skipped"] is True
        assert neighbors["passed"] is False
        assert neighbors["warnings"]

        text = runner.invoke(app, ["lemmas", str(system_path)])
        assert text.exit_code == 0
        assert "uniform-neighbors: skipped" in text.stdout
        assert "uniform-neighbors: pass" not in text.stdout

    def test_not_an_oriented_matroid(self, runner, write_system):
        """Exit 4 when elimination fails."""
        assert runner.invoke(app, ["lemmas", str(write_system(NEGATIVE))]).exit_code == 4


class TestCorpusCommand:
    """Test the corpus command."""

    def test_no_disagreements(self, runner):
        """Realizable systems plus a few near-misses, axioms against crabbed paths."""
        result = runner.invoke(app, ["corpus", "--size", "5", "--no-hulls", "--format", "json"])
        assert result.exit_code == 0
        summary = orjson.loads(result.stdout)
        assert summary["instances"] == 15 + 15 + 13 + 5
        assert summary["disagreements"] == []

    def test_covector_cap_reaches_every_instance(self, runner):
        """Instances beyond the closure budget are reported, not silently passed."""
        result = runner.invoke(
            app,
            ["corpus", "--size", "0", "--no-hulls", "--covector-cap", "1", "--format", "json"],
        )
        assert result.exit_code == 1
        summary = orjson.loads(result.stdout)
        assert len(summary["disagreements"]) == summary["instances"]


class TestRunConfig:
    """Test validation of CLI options."""

    def test_exactly_one_input(self, tmp_path):
        """A file path or --gen, never both, never neither."""
        with pytest.raises(ValidationError):
            RunConfig(command="check")
        with pytest.raises(ValidationError):
            RunConfig(command="check", input_path=tmp_path / "a.txt", gen_spec="u2n:3")
        assert RunConfig(command="check", gen_spec="u2n:3").gen_spec == "u2n:3"

    def test_sourceless_commands(self):
        """bench and corpus build their own instances."""
        assert RunConfig(command="corpus", jobs=2).jobs == 2
        with pytest.raises(ValidationError):
            RunConfig(command="bench", gen_spec="u2n:3")

    def test_positive_budgets(self):
        """Budgets and worker counts are positive."""
        with pytest.raises(ValidationError):
            RunConfig(command="corpus", covector_cap=0)
        with pytest.raises(ValidationError):
            RunConfig(command="corpus", jobs=0)
