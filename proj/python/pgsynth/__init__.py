"""Python front end for the pgsynth LTL reactive-synthesis engine."""

try:
    from ._pgsynth import (ParseError, ResourceLimit, SynthesisResult,
                           UnsupportedFragment, quality, synthesize)
except ImportError:  # running from the build tree
    import os
    import sys
    _d = os.environ.get("PGSYNTH_MODULE_DIR")
    if _d and _d not in sys.path:
        sys.path.insert(0, _d)
    from _pgsynth import (ParseError, ResourceLimit, SynthesisResult,
                          UnsupportedFragment, quality, synthesize)

__all__ = ["synthesize", "quality", "SynthesisResult", "ParseError",
           "UnsupportedFragment", "ResourceLimit"]
