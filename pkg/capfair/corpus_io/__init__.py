from capfair.corpus_io.coco import load_coco_annotations, write_corpus
from capfair.corpus_io.predictions import (
    load_candidates,
    load_gender_predictions,
    write_candidates,
    write_predictions,
)
