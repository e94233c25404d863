"""
Excepciones personalizadas para la aplicación.

Cada excepción lleva el código de salida del CLI:
0 éxito, 1 error de uso, 2 error de datos, 3 fallo numérico.
"""

from typing import Optional


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERICAL = 3


class AppException(Exception):
    """Excepción base de la aplicación"""
    def __init__(self, message: str, exit_code: int = EXIT_DATA):
        self.message = message
        self.exit_code = exit_code
        super().__init__(self.message)


class UsageException(AppException):
    """Error de uso del CLI (flags faltantes o incoherentes)"""
    def __init__(self, message: str):
        super().__init__(message, exit_code=EXIT_USAGE)


class DataException(AppException):
    """Error en los datos de entrada"""
    def __init__(self, message: str):
        super().__init__(message, exit_code=EXIT_DATA)


class NumericalException(AppException):
    """Fallo numérico (dominio, convergencia)"""
    def __init__(self, message: str):
        super().__init__(message, exit_code=EXIT_NUMERICAL)


# ========================================
# TRAZAS
# ========================================

class MalformedLine(DataException):
    """Línea de traza que no respeta la gramática"""
    def __init__(self, line_no: int, detail: str = ""):
        self.line_no = line_no
        message = f"Línea {line_no} mal formada"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class RangeViolation(DataException):
    """Campo fuera del rango declarado"""
    def __init__(self, line_no: int, field: str, detail: str = ""):
        self.line_no = line_no
        self.field = field
        message = f"Línea {line_no}: campo '{field}' fuera de rango"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class MissingStreamBegin(DataException):
    def __init__(self, line_no: Optional[int] = None):
        self.line_no = line_no
        where = f" (línea {line_no})" if line_no is not None else ""
        super().__init__(f"La traza no empieza con SB{where}")


class DuplicateStreamBegin(DataException):
    def __init__(self, line_no: int):
        self.line_no = line_no
        super().__init__(f"SB duplicado en la línea {line_no}")


class DuplicateOutputName(DataException):
    """Dos trazas del mismo lote escribirían el mismo archivo de salida"""
    def __init__(self, name: str, first_path):
        self.name = name
        super().__init__(f"la salida '{name}' ya corresponde a {first_path}")


# ========================================
# FEATURES Y MODELOS
# ========================================

class WrongKind(DataException):
    """Vector de features de un tipo distinto al esperado"""
    def __init__(self, expected: str, actual: str):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Se esperaba un vector {expected}, se recibió {actual}")


class DimensionMismatch(DataException):
    def __init__(self, expected: int, actual: int, context: str = ""):
        self.expected = expected
        self.actual = actual
        suffix = f" ({context})" if context else ""
        super().__init__(f"Dimensión incorrecta: se esperaban {expected}, hay {actual}{suffix}")


class MissingVariables(DataException):
    """Faltan variables requeridas por un modelo"""
    def __init__(self, model_id: str, missing, row_id: Optional[str] = None):
        self.model_id = model_id
        self.missing = sorted(missing)
        self.row_id = row_id
        where = f" en la fila '{row_id}'" if row_id else ""
        super().__init__(
            f"El modelo {model_id} requiere {', '.join(self.missing)}{where}"
        )


class NonPositiveNormalizer(DataException):
    def __init__(self, name: str, value: float):
        self.name = name
        self.value = value
        super().__init__(f"El normalizador {name} debe ser positivo (valor {value})")


class DomainError(NumericalException):
    """Argumento fuera del dominio de una función"""
    def __init__(self, message: str):
        super().__init__(message)


# ========================================
# AJUSTE
# ========================================

class InsufficientRows(DataException):
    def __init__(self, rows: int, required: int):
        self.rows = rows
        self.required = required
        super().__init__(f"Filas insuficientes: {rows} < {required}")


class NonPositiveEnergy(DataException):
    def __init__(self, value: float, row_id: Optional[str] = None):
        self.value = value
        self.row_id = row_id
        where = f" en la fila '{row_id}'" if row_id else ""
        super().__init__(f"La energía medida debe ser > 0 (valor {value}){where}")


class BoundViolation(DataException):
    def __init__(self, name: str, lower: float, upper: float):
        self.name = name
        super().__init__(f"Límites inconsistentes para {name}: [{lower}, {upper}]")


class NoConvergence(NumericalException):
    def __init__(self, model_id: str, iterations: int):
        self.model_id = model_id
        self.iterations = iterations
        super().__init__(
            f"El ajuste de {model_id} no convergió tras {iterations} iteraciones"
        )


# ========================================
# EVALUACIÓN
# ========================================

class TooFewRows(DataException):
    def __init__(self, rows: int, folds: int):
        self.rows = rows
        self.folds = folds
        super().__init__(f"No hay filas suficientes ({rows}) para {folds} folds")


class EmptyList(DataException):
    def __init__(self, what: str = "errores"):
        super().__init__(f"La lista de {what} está vacía")


class MissingFrameCount(DataException):
    def __init__(self, group: str, detail: str):
        self.group = group
        super().__init__(f"Grupo {group}: {detail}")


class NonMonotoneGroup(DataException):
    def __init__(self, group: str, frame_count: int):
        self.group = group
        self.frame_count = frame_count
        super().__init__(f"Grupo {group}: frame_count {frame_count} repetido")


# ========================================
# LABORATORIO SIMULADO
# ========================================

class MismatchedTraces(DataException):
    def __init__(self, detail: str):
        super().__init__(f"Las trazas de potencia no coinciden: {detail}")


class TooFewSamples(DataException):
    def __init__(self, m: int):
        self.m = m
        super().__init__(f"Se necesitan al menos 2 muestras (hay {m})")


class NonPositiveMean(DataException):
    def __init__(self, mean: float):
        self.mean = mean
        super().__init__(f"La media de las muestras debe ser > 0 (valor {mean})")


class ConfigInvalid(DataException):
    def __init__(self, detail: str):
        super().__init__(f"Configuración del generador inválida: {detail}")
