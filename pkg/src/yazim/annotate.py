"""Merging corrections into an annotated document and rendering it.

The annotation document carries every correction with both input-space and
output-space offsets; output offsets are the input offsets shifted by the
cumulative length delta of all preceding replacements. The markup rendering
turns each annotation into a button element with the rule metadata in data
attributes, leaving interactivity to the UI layer.
"""

from __future__ import annotations

import html
import re
from dataclasses import dataclass, field

from .catalog import RuleCatalog
from .grammar import Correction

_PARAGRAPH_RE = re.compile(r"\n+")
_TAG_RE = re.compile(r"<[^>]*>")


class AnnotationContractError(ValueError):
    """Corrections overlap or fall outside the document."""


@dataclass(frozen=True)
class Annotation:
    in_start: int
    in_end: int
    out_start: int
    out_end: int
    original_text: str
    replacement: str
    rule_id: int
    category: str
    color: str
    title: str
    explanation: str

    def to_dict(self) -> dict:
        return {
            "in_start": self.in_start,
            "in_end": self.in_end,
            "out_start": self.out_start,
            "out_end": self.out_end,
            "original_text": self.original_text,
            "replacement": self.replacement,
            "rule_id": self.rule_id,
            "category": self.category,
            "color": self.color,
            "title": self.title,
            "explanation": self.explanation,
        }


@dataclass
class AnnotatedDocument:
    original: str
    corrected: str
    annotations: list[Annotation] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "original": self.original,
            "corrected": self.corrected,
            "annotations": [a.to_dict() for a in self.annotations],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnnotatedDocument":
        return cls(
            original=data["original"],
            corrected=data["corrected"],
            annotations=[Annotation(**a) for a in data["annotations"]],
        )


def merge_and_offset(
    text: str, corrections: list[Correction], catalog: RuleCatalog
) -> AnnotatedDocument:
    """Apply sorted, non-overlapping corrections and compute output offsets."""
    previous_end = 0
    for c in corrections:
        if c.span_start < previous_end:
            raise AnnotationContractError(
                f"corrections overlap or are unsorted at offset {c.span_start}"
            )
        if c.span_end > len(text) or c.span_start < 0 or c.span_start > c.span_end:
            raise AnnotationContractError(
                f"correction span ({c.span_start}, {c.span_end}) out of bounds"
            )
        previous_end = c.span_end

    pieces: list[str] = []
    annotations: list[Annotation] = []
    cursor = 0
    delta = 0
    for c in corrections:
        rule = catalog.get(c.rule_id)
        pieces.append(text[cursor : c.span_start])
        pieces.append(c.replacement)
        out_start = c.span_start + delta
        annotations.append(
            Annotation(
                in_start=c.span_start,
                in_end=c.span_end,
                out_start=out_start,
                out_end=out_start + len(c.replacement),
                original_text=text[c.span_start : c.span_end],
                replacement=c.replacement,
                rule_id=c.rule_id,
                category=rule.category,
                color=rule.color,
                title=rule.mnemonic,
                explanation=rule.description_en,
            )
        )
        delta += len(c.replacement) - (c.span_end - c.span_start)
        cursor = c.span_end
    pieces.append(text[cursor:])
    return AnnotatedDocument(
        original=text, corrected="".join(pieces), annotations=annotations
    )


def to_plain(doc: AnnotatedDocument) -> str:
    return doc.corrected


_ASCII_MAP = str.maketrans("çğıöşü", "cgiosu")


def _category_slug(category: str) -> str:
    ascii_lower = category.lower().translate(_ASCII_MAP)
    slug = re.sub(r"[^a-z0-9]+", "-", ascii_lower).strip("-")
    return slug or "other"


def _render_segment(segment_text: str, seg_start: int, annotations) -> str:
    out: list[str] = []
    cursor = seg_start
    seg_end = seg_start + len(segment_text)
    for ann in annotations:
        if ann.out_end <= seg_start or ann.out_start >= seg_end:
            continue
        out.append(html.escape(segment_text[cursor - seg_start : ann.out_start - seg_start]))
        out.append(
            '<button type="button" class="gec-err gec-cat-{slug}" '
            'style="background-color: {color};" data-rule="{rule}" '
            'data-title="{title}" data-explanation="{explanation}" '
            'data-original="{original}">{label}</button>'.format(
                slug=_category_slug(ann.category),
                color=html.escape(ann.color, quote=True),
                rule=ann.rule_id,
                title=html.escape(ann.title, quote=True),
                explanation=html.escape(ann.explanation, quote=True),
                original=html.escape(ann.original_text, quote=True),
                label=html.escape(ann.replacement),
            )
        )
        cursor = ann.out_end
    out.append(html.escape(segment_text[cursor - seg_start :]))
    return "".join(out)


def to_markup(doc: AnnotatedDocument) -> str:
    """One <p> per paragraph; annotations rendered as data-attributed buttons."""
    paragraphs: list[str] = []
    pos = 0
    text = doc.corrected
    for match in list(_PARAGRAPH_RE.finditer(text)) + [None]:
        seg_end = match.start() if match else len(text)
        segment_text = text[pos:seg_end]
        paragraphs.append(f"<p>{_render_segment(segment_text, pos, doc.annotations)}</p>")
        if match is None:
            break
        pos = match.end()
    return "\n".join(paragraphs)


def strip_markup(markup: str) -> str:
    """Text content of the markup; paragraph breaks become newlines."""
    paragraphs = re.findall(r"<p>(.*?)</p>", markup, re.S)
    return "\n".join(html.unescape(_TAG_RE.sub("", p)) for p in paragraphs)
