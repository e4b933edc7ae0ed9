from pathlib import Path

import pytest

from parashift import demo

DATA_DIR = Path(__file__).parent / "data"
SCRIPTS_DIR = Path(__file__).parent.parent / "scripts"


@pytest.fixture
def demo_project():
    return demo.build_project()


@pytest.fixture
def extraction_files():
    base = DATA_DIR / "extraction"
    return {
        "src": base / "src.xml",
        "tgt": base / "tgt.xml",
        "links": base / "links.tsv",
        "whitelist": base / "whitelist.txt",
    }
