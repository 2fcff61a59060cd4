"""Succinct LCP representations over a suffix-array substrate."""

try:
    from weelcp._weelcp import *  # noqa: F401,F403
except ImportError:  # extension placed on sys.path directly (build-tree runs)
    from _weelcp import *  # noqa: F401,F403
