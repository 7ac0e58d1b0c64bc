
class ObstructionReport: pass
class Verdict: pass
class MinorSpec: pass
def aj4(*a, **k): raise NotImplementedError
def d_apply(*a, **k): raise NotImplementedError
def sphericity_obstruction_c2(*a, **k): raise NotImplementedError
def numerator_c2(*a, **k): raise NotImplementedError
def hachtroudi_flatness(*a, **k): raise NotImplementedError
def theta_obstruction_cn(*a, **k): raise NotImplementedError
def pseudospherical_verdict(*a, **k): raise NotImplementedError
def propagate_check(*a, **k): raise NotImplementedError
