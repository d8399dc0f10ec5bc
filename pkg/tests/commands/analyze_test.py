from unittest import mock

import pytest

from rankmet.code import RankCode
from rankmet.commands.analyze import AnalyzeCommand, parse_method
from rankmet.config import RunConfig
from rankmet.errors import InternalInconsistency, InvalidArgs, ParseError
from rankmet.minimal import MinimalityMethod


def test_parse_method():
    assert parse_method("all") == (MinimalityMethod.CUTTING, True)
    assert parse_method("lambda-sum") == (MinimalityMethod.LAMBDA_SUM, False)
    assert parse_method("pairwise") == (MinimalityMethod.PAIRWISE, False)


@pytest.mark.asyncio
async def test_analyze_sample_code(run_config, sample_file):
    result = await AnalyzeCommand(run_config)(file=sample_file)
    assert result.exit_code == 0
    output = result.output
    assert output["parameters"] == {"p": 2, "q": 2, "m": 3, "n": 4, "k": 2}
    assert output["weight_distribution"] == (1, 7, 0, 56, 0)
    assert (output["d"], output["w_rk"], output["one_weight"]) == (1, 3, False)
    assert output["effective_length"] == 4
    assert output["generalized_weights"] == (1, 4)
    assert output["linearity_index"].direct == 1
    assert output["minimality"].verdict
    assert output["bounds_ledger"].sufficiency_n_ge_km_minus_m_plus_1
    assert "skipped" not in output


@pytest.mark.asyncio
@pytest.mark.parametrize("method", ["pairwise", "lambda-sum", "all"])
async def test_analyze_with_each_method(run_config, sample_file, method):
    result = await AnalyzeCommand(run_config)(file=sample_file, method=method)
    assert result.output["minimality"].verdict


@pytest.mark.asyncio
async def test_analyze_reports_skipped_computations(sample_file):
    result = await AnalyzeCommand(RunConfig(budget=10))(file=sample_file)
    assert result.exit_code == 3
    assert "weight_distribution" in result.output["skipped"]
    assert "budget is 10" in result.output["skipped"]["weight_distribution"]
    assert result.output["parameters"]["n"] == 4


@pytest.mark.asyncio
async def test_analyze_zero_code(run_config, write_json, f8):
    path = write_json("zero.json", RankCode.zero(f8, 3).to_json())
    result = await AnalyzeCommand(run_config)(file=path)
    assert result.exit_code == 0
    assert result.output["weight_distribution"] == (1, 0, 0, 0)
    assert result.output["d"] == 4
    assert "geometry" in result.output["skipped"]


@pytest.mark.asyncio
async def test_analyze_missing_file(run_config, tmp_path):
    with pytest.raises(ParseError, match="No such file"):
        await AnalyzeCommand(run_config)(file=tmp_path / "missing.json")


@pytest.mark.asyncio
async def test_analyze_without_nondegeneracy_omits_effective_length(run_config, sample_file):
    with mock.patch(
        "rankmet.commands.analyze.is_nondegenerate",
        side_effect=InvalidArgs("nondegeneracy unavailable"),
    ):
        result = await AnalyzeCommand(run_config)(file=sample_file)
    assert result.output["skipped"]["nondegeneracy"] == "nondegeneracy unavailable"
    assert "nondegeneracy" not in result.output
    assert "effective_length" not in result.output
    assert result.output["generalized_weights"] == (1, 4)


@pytest.mark.asyncio
async def test_analyze_raises_when_generalized_weights_disagree(run_config, sample_file):
    with mock.patch(
        "rankmet.code.generalized_rank_weights_by_definition", return_value=(1, 3)
    ):
        with pytest.raises(InternalInconsistency, match="differ from the definition"):
            await AnalyzeCommand(run_config)(file=sample_file)
