#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import io
import json
import logging
from typing import IO, List, Optional

from nmbu.maxclass import common
from nmbu.maxclass.common import (COMMENT_LABEL, DEPTH_LABEL, END_OF_HEADER_LABEL, PRIME_LABEL,
                                  SEQUENCE_FILE_TYPE_LABEL, TYPE_N_LABEL)
from nmbu.maxclass.sequence.beta import AlphaSequence, BetaSequence

LOG = logging.getLogger(__name__)

FORMAT_VERSION = "1.0"
SUPPORTED_KINDS = ("beta", "alpha")
SUPPORTED_FORMATS = ("json", "text")
VALUES_PER_LINE = 20


class SequenceHeader:
    """
    Header of a text sequence file.

    - version: str
    - kind: 'beta' | 'alpha'
    - p: int
    - n: int
    - depth: int
    - comments: [str]
    """

    def __init__(self, version: str, kind: str):
        self.version = version
        self.kind = kind
        self.p: Optional[int] = None
        self.n: Optional[int] = None
        self.depth: Optional[int] = None
        self.comments: List[str] = []


def _build(kind: str, p: int, n: int, depth: int, betas: List[int]) -> BetaSequence:
    assert kind in SUPPORTED_KINDS, "Unknown sequence kind '%s'" % kind
    assert len(betas) == depth - n, \
        "Expected %d entries for indices %d..%d, got %d" % (depth - n, n + 1, depth, len(betas))
    if kind == "alpha":
        assert n == 1, "Alpha sequences have n = 1, got %d" % n
        return AlphaSequence(p, betas)
    return BetaSequence(p, n, betas)


def __read_first_line(line: str) -> (str, str):
    """
    Expects the first line to be of format:

    >>> 1.0       BETA                                              SEQUENCE FILE / TYPE
    """
    line = common.normalize_header_line(line)
    assert line[60:80].strip() == SEQUENCE_FILE_TYPE_LABEL, \
        "First line is expected to have label '%s', which was not found" % SEQUENCE_FILE_TYPE_LABEL
    fields = line[:60].split()
    assert len(fields) == 2, "Expected version and kind in '%s'" % line[:60].strip()
    kind = fields[1].lower()
    assert kind in SUPPORTED_KINDS, "Unknown sequence kind '%s'" % fields[1]
    return fields[0], kind


def read_sequence_header(file: IO) -> SequenceHeader:
    """
    Parses header lines until the END OF HEADER line is read.

    :param file: file iterator positioned at the first line
    :return: SequenceHeader with p, n and depth filled in
    """
    version, kind = __read_first_line(file.readline())
    header = SequenceHeader(version, kind)
    for line in file:
        line = common.normalize_header_line(line)
        label = line[60:80].strip()
        value = line[:60].strip()
        if label == END_OF_HEADER_LABEL:
            break
        if label == PRIME_LABEL:
            header.p = common.str2int(value, "Invalid value in " + PRIME_LABEL)
        elif label == TYPE_N_LABEL:
            header.n = common.str2int(value, "Invalid value in " + TYPE_N_LABEL)
        elif label == DEPTH_LABEL:
            header.depth = common.str2int(value, "Invalid value in " + DEPTH_LABEL)
        elif label == COMMENT_LABEL:
            header.comments.append(value)
        else:
            raise ValueError("Unknown header label '%s'" % label)
    else:
        raise ValueError("Missing '%s' line" % END_OF_HEADER_LABEL)

    for name, label in (("p", PRIME_LABEL), ("n", TYPE_N_LABEL), ("depth", DEPTH_LABEL)):
        assert getattr(header, name) is not None, "Missing header line '%s'" % label
    return header


def read_text_sequence(file: IO) -> BetaSequence:
    header = read_sequence_header(file)
    betas = [common.str2int(token, "Invalid sequence entry '%s'" % token)
             for line in file for token in line.split()]
    return _build(header.kind, header.p, header.n, header.depth, betas)


def read_json_sequence(file: IO) -> BetaSequence:
    try:
        record = json.load(file)
    except json.JSONDecodeError as exc:
        raise ValueError("Invalid JSON sequence file") from exc
    for key in ("p", "n", "depth", "betas"):
        assert key in record, "Missing key '%s' in sequence record" % key
    return _build(record.get("kind", "beta"), int(record["p"]), int(record["n"]), int(record["depth"]),
                  [int(b) for b in record["betas"]])


def read_sequence_file(path: str, verbose: bool = False) -> BetaSequence:
    """
    Reads a sequence file; JSON or the labelled text layout is detected from the first character.

    Examples
    --------

    >>> seq = read_sequence_file('tests/resources/all_ones_p5_n2.json')
    >>> seq
    BetaSequence(p=5, n=2, depth=30)

    :param path: path to the file
    :param verbose: log the detected format at INFO level
    :return: BetaSequence, or AlphaSequence for alpha files
    """
    with io.open(path, mode="r") as file:
        content = file.read()
    is_json = content.lstrip().startswith("{")
    if verbose:
        LOG.info("Reading %s sequence file %s", "JSON" if is_json else "text", path)
    stream = io.StringIO(content)
    return read_json_sequence(stream) if is_json else read_text_sequence(stream)


def sequence_to_text(seq: BetaSequence, comment: Optional[str] = None) -> str:
    lines = [common.format_header_line("{v:<10s}{k:s}".format(v=FORMAT_VERSION, k=seq.kind.upper()),
                                       SEQUENCE_FILE_TYPE_LABEL),
             common.format_header_line(str(seq.p), PRIME_LABEL),
             common.format_header_line(str(seq.n), TYPE_N_LABEL),
             common.format_header_line(str(seq.depth), DEPTH_LABEL)]
    if comment:
        lines += [common.format_header_line(part, COMMENT_LABEL) for part in comment.splitlines()]
    lines.append(common.format_header_line("", END_OF_HEADER_LABEL))
    values = seq.values()
    for start in range(0, len(values), VALUES_PER_LINE):
        lines.append(" ".join(str(v) for v in values[start:start + VALUES_PER_LINE]))
    return "\n".join(lines) + "\n"


def sequence_to_json(seq: BetaSequence) -> str:
    return json.dumps(seq.to_dict(), sort_keys=True, indent=2) + "\n"


def write_sequence_file(seq: BetaSequence, path: str, fmt: str = "json", comment: Optional[str] = None) -> None:
    """
    Writes a sequence as JSON or in the labelled text layout. Comments are kept only by the text layout.
    """
    if fmt not in SUPPORTED_FORMATS:
        raise ValueError("Unknown format '%s', expected one of %s" % (fmt, SUPPORTED_FORMATS))
    with io.open(path, mode="w") as file:
        file.write(sequence_to_json(seq) if fmt == "json" else sequence_to_text(seq, comment))
