"""Engine output against records frozen by scripts/bruteforce_fixtures.py."""
import json
from pathlib import Path

import pytest

from coradical.cli import main
from coradical.fileformat import load
from coradical.report import fixture_record

HERE = Path(__file__).parent / "fixtures"
FILES = sorted((HERE / "coalgebras").glob("*.json"))


def test_fixture_set_is_the_theorem_corpus(theorem_items):
    assert sorted(p.stem for p in FILES) == sorted(it.name for it in theorem_items)


@pytest.mark.parametrize("path", FILES, ids=[p.stem for p in FILES])
def test_engine_matches_bruteforce_record(path):
    c, _ = load(str(path))
    mine = json.dumps(fixture_record(c), indent=1, ensure_ascii=False) + "\n"
    assert mine == (HERE / "derived" / path.name).read_text()


@pytest.mark.parametrize("path", FILES, ids=[p.stem for p in FILES])
def test_generator_reproduces_frozen_file(path, tmp_path):
    meta = json.loads(path.read_text())["metadata"]
    out = tmp_path / path.name
    assert main(["gen", meta["generator"], *meta["params"], "-o", str(out)]) == 0
    assert out.read_text() == path.read_text()
