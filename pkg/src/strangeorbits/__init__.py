"""Exact computations with strange coadjoint orbits and complementary subalgebras in gl_n / sl_n."""

__version__ = "0.1.0"
