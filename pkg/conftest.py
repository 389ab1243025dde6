import json
import os
import shutil
import tempfile

import pytest

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "capfair", "test", "data")


@pytest.fixture()
def cleandir():
    oldpath = os.getcwd()
    newpath = tempfile.mkdtemp()
    os.chdir(newpath)
    yield newpath

    os.chdir(oldpath)
    shutil.rmtree(newpath)


@pytest.fixture()
def lexicon():
    from capfair.lexicon import default_lexicon

    return default_lexicon()


@pytest.fixture()
def toy_annotations():
    """Seven images, one without annotations; confident = {1: male, 2: female, 6: male}, nature = {4}."""
    return os.path.join(DATA_DIR, "toy_annotations.json")


@pytest.fixture()
def toy_corpus(toy_annotations):
    from capfair.corpus_io import load_coco_annotations

    return load_coco_annotations(toy_annotations)


@pytest.fixture()
def write_json(cleandir):
    """Writes an object to a JSON file in the temporary working directory and returns its path."""

    def write(name, obj):
        path = os.path.join(cleandir, name)
        with open(path, "w") as fp:
            json.dump(obj, fp)
        return path

    return write
