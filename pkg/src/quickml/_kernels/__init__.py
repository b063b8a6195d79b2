"""Twin kernel builds: numba_impl (@njit) and numpy_impl (fallback).

Both modules expose the same functions with the same signatures and
semantics; quickml.backend picks one at call time. Keep the two in
lockstep when changing either.
"""
