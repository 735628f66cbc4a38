import importlib.metadata as metadata

import desargues


def test_version_matches_metadata():
    assert desargues.__version__ == metadata.version("desargues")
