class MatspecError(Exception): pass
class ConfigurationError(MatspecError, ValueError): pass
class ParseError(MatspecError, ValueError): pass
class UnknownFunction(MatspecError, KeyError): pass

# matrix-core
class EigenFailure(MatspecError): pass
class IllConditionedEigenbasis(MatspecError): pass
class DomainError(MatspecError, ValueError): pass
class BranchCut(DomainError): pass
class GenerationFailure(MatspecError): pass
class NotPositiveStable(MatspecError, ValueError): pass
class NonCommuting(MatspecError, ValueError): pass

# series
class SingularDenominator(MatspecError): pass
class SingularShift(MatspecError): pass
class Nonconvergence(MatspecError, ArithmeticError): pass
class DegenerateSeries(MatspecError): pass
class ShapeMismatch(MatspecError, ValueError): pass
class ExponentMismatch(ShapeMismatch): pass
class NonCommutingOperator(MatspecError): pass
class ExtractionUnstable(MatspecError): pass

# integral operators
class QuadratureError(MatspecError): pass
class TailBoundViolation(QuadratureError): pass
class SingularityUnresolved(QuadratureError): pass
class DivergentIntegral(QuadratureError): pass
class NonIntegerPowerAmbiguity(MatspecError): pass
