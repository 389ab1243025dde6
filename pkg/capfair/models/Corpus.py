"""
In-memory models for caption corpora and the external per-image files the toolkit consumes.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from capfair import DuplicateIdError, GenderLabel, ValidationError
from capfair.util.helpers import duplicates


@dataclass(frozen=True)
class ImageRecord:
    image_id: int
    file_name: str
    captions: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "captions", tuple(self.captions))
        if not self.captions:
            raise ValidationError("image %s has no captions" % self.image_id)
        for i, caption in enumerate(self.captions):
            if not caption.strip():
                raise ValidationError("image %s: caption #%d is blank" % (self.image_id, i))


@dataclass(frozen=True)
class Corpus:
    """
    An immutable set of ImageRecords, always iterated in ascending image_id.

    >>> c = Corpus([ImageRecord(2, "b.jpg", ("a dog",)), ImageRecord(1, "a.jpg", ("a cat",))])
    >>> c.image_ids
    (1, 2)
    >>> len(c)
    2
    """

    images: Tuple[ImageRecord, ...]
    source_label: str = ""
    _index: Dict[int, ImageRecord] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        images = tuple(sorted(self.images, key=lambda r: r.image_id))
        for image_id in duplicates(r.image_id for r in images):
            raise DuplicateIdError(image_id, "corpus %s" % self.source_label)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_index", {r.image_id: r for r in images})

    def __len__(self):
        return len(self.images)

    def __iter__(self) -> Iterator[ImageRecord]:
        return iter(self.images)

    def __contains__(self, image_id):
        return image_id in self._index

    @property
    def image_ids(self):
        return tuple(r.image_id for r in self.images)

    def get(self, image_id) -> ImageRecord:
        return self._index[image_id]

    def subset(self, image_ids: Iterable[int], source_label: Optional[str] = None) -> "Corpus":
        keep = set(image_ids)
        return Corpus(
            tuple(r for r in self.images if r.image_id in keep),
            self.source_label if source_label is None else source_label,
        )

    def replace_captions(self, captions_by_id: Mapping[int, Tuple[str, ...]], source_label=None) -> "Corpus":
        return Corpus(
            tuple(
                ImageRecord(r.image_id, r.file_name, captions_by_id.get(r.image_id, r.captions))
                for r in self.images
            ),
            self.source_label if source_label is None else source_label,
        )

    def __repr__(self):
        return "<Corpus %s (%d images)>" % (self.source_label or "-", len(self))


@dataclass(frozen=True)
class Prediction:
    label: GenderLabel
    confidence: Optional[float] = None

    def __post_init__(self):
        if self.confidence is not None and not 0.0 <= self.confidence <= 1.0:
            raise ValidationError("confidence %r is outside [0, 1]" % self.confidence)


@dataclass(frozen=True)
class GenderPredictionFile:
    entries: Mapping[int, Prediction]
    source_label: str = ""

    def label_for(self, image_id) -> GenderLabel:
        """Images missing from the file are Unknown."""
        p = self.entries.get(image_id)
        return GenderLabel.unknown if p is None else p.label

    def __len__(self):
        return len(self.entries)

    def __contains__(self, image_id):
        return image_id in self.entries


@dataclass(frozen=True)
class CandidateCaptionFile:
    entries: Mapping[int, str]
    label: str = "candidates"

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(sorted(self.entries.items()))

    @property
    def image_ids(self):
        return tuple(sorted(self.entries))

    def restrict(self, image_ids: Iterable[int]) -> "CandidateCaptionFile":
        keep = set(image_ids)
        return CandidateCaptionFile({k: v for k, v in self.entries.items() if k in keep}, self.label)
