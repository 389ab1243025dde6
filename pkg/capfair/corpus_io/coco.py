"""
Reading and writing MSCOCO-style caption annotation files.

The schema is the one published with the MSCOCO captions: a top-level object with an ``images`` array
(``id``, ``file_name``) and an ``annotations`` array (``image_id``, ``caption``).  Corpus files written
by :func:`write_corpus` use the same schema, so splits and neutralized corpora load like the originals.
"""
import json
import logging
import os
from collections import OrderedDict

from capfair import DuplicateIdError, OutputError, ParseError, UnknownImageError, ValidationError
from capfair.models.Corpus import Corpus, ImageRecord
from capfair.util.helpers import dump_json, mkdir

log = logging.getLogger(__name__)

SOURCE_LABEL_KEY = "capfair_source_label"


def is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def read_json(path, what="file"):
    if not os.path.exists(path):
        raise ParseError("%s %s does not exist" % (what, path))
    try:
        with open(path, "r", encoding="utf-8") as fp:
            return json.load(fp)
    except ValueError as e:
        raise ParseError("%s %s is not valid JSON: %s" % (what, path, e))
    except OSError as e:
        raise ParseError("cannot read %s %s: %s" % (what, path, e))


def load_coco_annotations(path) -> Corpus:
    """
    Loads an MSCOCO captions annotation file into a Corpus.

    Images without any annotation are dropped (and logged).  Captions keep the order in which their
    annotations appear in the file.
    """
    data = read_json(path, "annotation file")
    if not isinstance(data, dict):
        raise ParseError("annotation file %s: top level must be an object" % path)
    for key in ("images", "annotations"):
        if not isinstance(data.get(key), list):
            raise ParseError("annotation file %s: missing `%s` array" % (path, key))

    file_names = OrderedDict()
    for i, img in enumerate(data["images"]):
        if not (isinstance(img, dict) and is_int(img.get("id")) and isinstance(img.get("file_name"), str)):
            raise ParseError(
                "annotation file %s: images[%d] needs an integer `id` and a string `file_name`" % (path, i)
            )
        if img["id"] in file_names:
            raise DuplicateIdError(img["id"], "annotation file %s" % path)
        file_names[img["id"]] = img["file_name"]

    captions = {image_id: [] for image_id in file_names}
    unknown = []
    for i, ann in enumerate(data["annotations"]):
        valid = isinstance(ann, dict) and is_int(ann.get("image_id")) and isinstance(ann.get("caption"), str)
        if not valid:
            raise ParseError(
                "annotation file %s: annotations[%d] must have an integer `image_id` and a string `caption`"
                % (path, i)
            )
        if ann["image_id"] not in captions:
            unknown.append(ann["image_id"])
            continue
        if not ann["caption"].strip():
            raise ValidationError("annotation file %s: annotations[%d] has a blank caption" % (path, i))
        captions[ann["image_id"]].append(ann["caption"])

    if unknown:
        raise UnknownImageError(unknown, "annotation file %s" % path)

    dropped = sorted(image_id for image_id, caps in captions.items() if not caps)
    if dropped:
        log.warning(
            "%s: dropping %d image(s) with no annotations (first ids: %s)",
            path,
            len(dropped),
            ", ".join(map(str, dropped[:10])),
        )

    info = data.get("info") if isinstance(data.get("info"), dict) else {}
    if SOURCE_LABEL_KEY in info:
        source_label = info[SOURCE_LABEL_KEY]
        if not isinstance(source_label, str):
            raise ParseError("annotation file %s: `info.%s` must be a string" % (path, SOURCE_LABEL_KEY))
    else:
        source_label = os.path.splitext(os.path.basename(path))[0]

    corpus = Corpus(
        tuple(
            ImageRecord(image_id, file_names[image_id], tuple(caps))
            for image_id, caps in captions.items()
            if caps
        ),
        source_label,
    )
    log.info("loaded %s from %s", corpus, path)
    return corpus


def corpus_to_dict(corpus: Corpus):
    images = []
    annotations = []
    for record in corpus:
        images.append({"id": record.image_id, "file_name": record.file_name})
        for caption in record.captions:
            annotations.append({"id": len(annotations) + 1, "image_id": record.image_id, "caption": caption})
    return {"info": {SOURCE_LABEL_KEY: corpus.source_label}, "images": images, "annotations": annotations}


def write_corpus(corpus: Corpus, path):
    """Writes `corpus` in the annotation schema; `load_coco_annotations(path) == corpus` afterwards."""
    try:
        mkdir(os.path.dirname(path))
        with open(path, "w", encoding="utf-8") as fp:
            dump_json(corpus_to_dict(corpus), fp)
    except OSError as e:
        raise OutputError(path, e.strerror or str(e))
    log.debug("wrote %s to %s", corpus, path)
