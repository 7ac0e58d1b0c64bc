
class RealGraph: pass
class ComplexGraph: pass
class SurfacePoint: pass
class LeviData: pass
class LatticeSpec: pass
class LeviDegenerateError(Exception): pass
def complexify(*a, **k): raise NotImplementedError
def recenter(*a, **k): raise NotImplementedError
def levi_matrix(*a, **k): raise NotImplementedError
def is_levi_nondegenerate(*a, **k): raise NotImplementedError
def signature_at(*a, **k): raise NotImplementedError
def levi_locus_sample(*a, **k): raise NotImplementedError
