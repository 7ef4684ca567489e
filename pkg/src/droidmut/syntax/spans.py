from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Span:
    """Half-open byte range ``[start, end)`` inside one project file."""

    file: str
    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start <= self.end:
            raise ValueError(f"invalid span {self.start}..{self.end} in {self.file}")

    def __len__(self):
        return self.end - self.start

    def slice(self, content: bytes) -> bytes:
        return content[self.start:self.end]

    def contains(self, other: Span) -> bool:
        return self.file == other.file and self.start <= other.start and other.end <= self.end

    def overlaps(self, other: Span) -> bool:
        return self.file == other.file and self.start < other.end and other.start < self.end

    def to_dict(self):
        return {"file": self.file, "start": self.start, "end": self.end}
