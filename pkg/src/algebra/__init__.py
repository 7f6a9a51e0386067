"""
Exact linear algebra over F_q, quiver representations and the Hall algebras
built on top of them.
"""
