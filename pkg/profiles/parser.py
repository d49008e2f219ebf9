"""
Profile file parser and serializer
Reads the native profile format and PrefLib .soc files
"""
import re
from typing import Dict, List, Optional, Tuple, Union

from loguru import logger

from errors import DuplicateAlternativeInRanking, EmptyProfile, MalformedLine, UnknownAlternative
from profiles.profile import MAX_VOTERS, Alternative, Ballot, PreferenceProfile

MULTIPLICITY_LINE = re.compile(r"^\s*(\d+)\s*:(.*)$")
SOC_NAME_LINE = re.compile(r"^#\s*ALTERNATIVE NAME\s+(\d+)\s*:\s*(.*)$")

Text = Union[str, bytes]


def _decode(text: Text) -> str:
    if isinstance(text, bytes):
        return text.decode("utf-8")
    return text


class ProfileParser:
    """Parser for the profile text formats"""

    def parse(self, text: Text) -> PreferenceProfile:
        """
        Parse the native profile format

        Args:
            text: File contents; `#` comments, `a,b,c` or `K: a,b,c` ballot lines

        Returns:
            PreferenceProfile with ids assigned in sorted-name order
        """
        raw: List[Tuple[int, int, List[str]]] = []
        total = 0
        for line_no, line in enumerate(_decode(text).splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            multiplicity, body = self._split_multiplicity(stripped, line_no)
            total = self._add_voters(total, multiplicity, line_no)
            raw.append((line_no, multiplicity, self._split_names(body, line_no)))

        if not raw:
            raise EmptyProfile()

        first_line, _, first_names = raw[0]
        universe = set(first_names)
        for line_no, _, names in raw:
            for name in names:
                if name not in universe:
                    raise UnknownAlternative(name, line_no)
            if len(names) != len(universe):
                raise MalformedLine(line_no, f"ranking lists {len(names)} of {len(universe)} alternatives")

        ordered = sorted(universe)
        index = {name: i for i, name in enumerate(ordered)}
        ballots = tuple(
            Ballot(multiplicity, tuple(index[name] for name in names))
            for _, multiplicity, names in raw
        )
        profile = PreferenceProfile(
            alternatives=tuple(Alternative(i, name) for i, name in enumerate(ordered)),
            ballots=ballots,
        )
        logger.debug(f"Parsed profile: m={profile.m}, n={profile.n}, lines={len(ballots)}")
        return profile

    def parse_soc(self, text: Text) -> PreferenceProfile:
        """
        Parse a PrefLib strict-complete-order (.soc) file

        Args:
            text: File contents; `#` headers, `count: i1,i2,...` data lines with 1-based ids

        Returns:
            PreferenceProfile keeping the file's alternative ids (shifted to 0-based)
        """
        names: Dict[int, str] = {}
        rows: List[Tuple[int, int, List[int]]] = []
        total = 0
        for line_no, line in enumerate(_decode(text).splitlines(), start=1):
            stripped = line.strip()
            if not stripped:
                continue
            if stripped.startswith("#"):
                match = SOC_NAME_LINE.match(stripped)
                if match:
                    names[int(match.group(1))] = _sanitize_name(match.group(2), int(match.group(1)))
                continue
            match = MULTIPLICITY_LINE.match(stripped)
            if not match:
                raise MalformedLine(line_no, "expected 'count: i1,i2,...'")
            count = int(match.group(1))
            if count < 1:
                raise MalformedLine(line_no, "count must be positive")
            total = self._add_voters(total, count, line_no)
            try:
                ids = [int(tok) for tok in match.group(2).split(",")]
            except ValueError:
                raise MalformedLine(line_no, "alternative ids must be integers")
            rows.append((line_no, count, ids))

        if not rows:
            raise EmptyProfile()

        m = len(rows[0][2])
        ballots = []
        for line_no, count, ids in rows:
            seen = set()
            for alt in ids:
                if not 1 <= alt <= m:
                    raise UnknownAlternative(str(alt), line_no)
                if alt in seen:
                    raise DuplicateAlternativeInRanking(str(alt), line_no)
                seen.add(alt)
            if len(ids) != m:
                raise MalformedLine(line_no, f"ranking lists {len(ids)} of {m} alternatives")
            ballots.append(Ballot(count, tuple(alt - 1 for alt in ids)))

        alternatives = tuple(Alternative(i - 1, names.get(i, str(i))) for i in range(1, m + 1))
        if len({a.name for a in alternatives}) != m:
            alternatives = tuple(Alternative(i - 1, str(i)) for i in range(1, m + 1))
        profile = PreferenceProfile(alternatives=alternatives, ballots=tuple(ballots))
        logger.debug(f"Parsed .soc profile: m={profile.m}, n={profile.n}")
        return profile

    def serialize(self, profile: PreferenceProfile) -> str:
        lines = []
        for ballot in profile.ballots:
            body = ",".join(profile.name_of(alt) for alt in ballot.ranking)
            lines.append(body if ballot.multiplicity == 1 else f"{ballot.multiplicity}: {body}")
        return "\n".join(lines) + "\n"

    def _split_multiplicity(self, line: str, line_no: int) -> Tuple[int, str]:
        if ":" not in line:
            return 1, line
        match = MULTIPLICITY_LINE.match(line)
        if not match:
            raise MalformedLine(line_no, "multiplicity must be a positive integer before ':'")
        multiplicity = int(match.group(1))
        if multiplicity < 1:
            raise MalformedLine(line_no, "multiplicity must be positive")
        return multiplicity, match.group(2)

    def _add_voters(self, total: int, multiplicity: int, line_no: int) -> int:
        total += multiplicity
        if total > MAX_VOTERS:
            raise MalformedLine(line_no, f"voter count exceeds {MAX_VOTERS}")
        return total

    def _split_names(self, body: str, line_no: int) -> List[str]:
        names = [tok.strip() for tok in body.split(",")]
        if any(not name for name in names):
            raise MalformedLine(line_no, "empty alternative name")
        seen = set()
        for name in names:
            if name in seen:
                raise DuplicateAlternativeInRanking(name, line_no)
            seen.add(name)
        return names


def _sanitize_name(name: str, fallback: int) -> str:
    cleaned = re.sub(r"[\s,:>]+", "_", name.strip()).strip("_")
    return cleaned or str(fallback)


_parser: Optional[ProfileParser] = None


def get_parser() -> ProfileParser:
    """Get the shared parser instance"""
    global _parser
    if _parser is None:
        _parser = ProfileParser()
    return _parser


def parse_profile(text: Text) -> PreferenceProfile:
    return get_parser().parse(text)


def parse_soc(text: Text) -> PreferenceProfile:
    return get_parser().parse_soc(text)


def serialize_profile(profile: PreferenceProfile) -> str:
    return get_parser().serialize(profile)
