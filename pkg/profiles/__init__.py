# Profiles module: preference profiles, file formats and margins
from profiles.profile import Alternative, Ballot, PreferenceProfile, margins
from profiles.parser import ProfileParser, parse_profile, parse_soc, serialize_profile

__all__ = [
    "Alternative",
    "Ballot",
    "PreferenceProfile",
    "margins",
    "ProfileParser",
    "parse_profile",
    "parse_soc",
    "serialize_profile",
]
