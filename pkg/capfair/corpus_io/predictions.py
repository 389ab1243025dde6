"""
Per-image files produced outside the toolkit: gender predictions and candidate captions.
"""
import csv
import logging
import os

from capfair import DuplicateIdError, GenderLabel, InvalidLabelError, OutputError, ParseError, ValidationError
from capfair.corpus_io.coco import is_int, read_json
from capfair.models.Corpus import CandidateCaptionFile, GenderPredictionFile, Prediction
from capfair.util.helpers import dump_json, mkdir

log = logging.getLogger(__name__)

LABELS = {g.value: g for g in GenderLabel}


def _parse_label(raw, where):
    if not isinstance(raw, str):
        raise InvalidLabelError("%s: label must be a string, got %r" % (where, raw))
    label = LABELS.get(raw.strip().lower())
    if label is None:
        expected = ", ".join(sorted(LABELS))
        raise InvalidLabelError("%s: invalid label %r, expected one of %s" % (where, raw, expected))
    return label


def _parse_confidence(raw, where):
    if raw is None or raw == "":
        return None
    try:
        confidence = float(raw)
    except (TypeError, ValueError):
        raise ParseError("%s: confidence %r is not a number" % (where, raw))
    if not 0.0 <= confidence <= 1.0:
        raise ValidationError("%s: confidence %r is outside [0, 1]" % (where, confidence))
    return confidence


def _read_csv_records(path):
    try:
        with open(path, "r", encoding="utf-8", newline="") as fp:
            reader = csv.DictReader(fp)
            if reader.fieldnames is None or not {"image_id", "label"} <= set(reader.fieldnames):
                raise ParseError("prediction file %s: CSV header needs image_id,label[,confidence]" % path)
            records = []
            for i, row in enumerate(reader):
                try:
                    image_id = int(row["image_id"])
                except (TypeError, ValueError):
                    raise ParseError("prediction file %s: row %d has a non-integer image_id" % (path, i + 1))
                records.append(dict(image_id=image_id, label=row["label"], confidence=row.get("confidence")))
            return records
    except OSError as e:
        raise ParseError("cannot read prediction file %s: %s" % (path, e))


def load_gender_predictions(path) -> GenderPredictionFile:
    """
    Loads gender predictions from a JSON array of ``{image_id, label, confidence?}`` objects, or from a
    CSV file (``.csv`` extension) with header ``image_id,label,confidence``.
    """
    if not os.path.exists(path):
        raise ParseError("prediction file %s does not exist" % path)
    if path.lower().endswith(".csv"):
        records = _read_csv_records(path)
    else:
        records = read_json(path, "prediction file")
        if not isinstance(records, list):
            raise ParseError("prediction file %s: top level must be an array" % path)

    entries = dict()
    for i, rec in enumerate(records):
        where = "prediction file %s, record %d" % (path, i)
        if not isinstance(rec, dict) or not is_int(rec.get("image_id")):
            raise ParseError("%s: must have an integer `image_id`" % where)
        if rec["image_id"] in entries:
            raise DuplicateIdError(rec["image_id"], "prediction file %s" % path)
        entries[rec["image_id"]] = Prediction(
            _parse_label(rec.get("label"), where), _parse_confidence(rec.get("confidence"), where)
        )
    log.info("loaded %d gender predictions from %s", len(entries), path)
    return GenderPredictionFile(entries, os.path.basename(path))


def load_candidates(path, label=None) -> CandidateCaptionFile:
    """Loads a JSON array of ``{image_id, caption}`` objects (the MSCOCO results format)."""
    records = read_json(path, "candidate file")
    if not isinstance(records, list):
        raise ParseError("candidate file %s: top level must be an array" % path)
    entries = dict()
    for i, rec in enumerate(records):
        valid = isinstance(rec, dict) and is_int(rec.get("image_id")) and isinstance(rec.get("caption"), str)
        if not valid:
            raise ParseError(
                "candidate file %s: record %d needs an integer `image_id` and a string `caption`" % (path, i)
            )
        if rec["image_id"] in entries:
            raise DuplicateIdError(rec["image_id"], "candidate file %s" % path)
        entries[rec["image_id"]] = rec["caption"]
    label = label or os.path.splitext(os.path.basename(path))[0]
    log.info("loaded %d candidate captions `%s` from %s", len(entries), label, path)
    return CandidateCaptionFile(entries, label)


def _write(records, path):
    try:
        mkdir(os.path.dirname(path))
        with open(path, "w", encoding="utf-8") as fp:
            dump_json(records, fp)
    except OSError as e:
        raise OutputError(path, e.strerror or str(e))


def write_candidates(candidates: CandidateCaptionFile, path):
    _write([{"image_id": image_id, "caption": caption} for image_id, caption in candidates], path)


def write_predictions(predictions: GenderPredictionFile, path):
    records = []
    for image_id, p in sorted(predictions.entries.items()):
        rec = {"image_id": image_id, "label": p.label.value}
        if p.confidence is not None:
            rec["confidence"] = p.confidence
        records.append(rec)
    _write(records, path)
