"""
Jerarquía de errores de relcat.

Todas las excepciones heredan de ErrorRelcat y saben convertirse en el objeto
de error que la consola imprime con --json.
"""


class ErrorRelcat(Exception):
    """Error base de relcat."""

    codigo = "error"

    def detalles(self):
        """Campos propios de la subclase que acompañan al mensaje."""
        return {}

    def a_diccionario(self):
        """
        Convierte el error en un diccionario serializable a JSON.

        Returns:
            dict: Claves "error", "mensaje" y los detalles propios de cada subclase
        """
        datos = {"error": self.codigo, "mensaje": str(self)}
        datos.update(self.detalles())
        return datos


class ErrorDeLectura(ErrorRelcat):
    """Entrada ilegible o mal formada, con la posición del problema."""

    codigo = "lectura"

    def __init__(self, mensaje, ruta=None, linea=0, columna=0):
        self.ruta = ruta
        self.linea = linea
        self.columna = columna
        ubicacion = f"{ruta or '<texto>'}:{linea}:{columna}"
        super().__init__(f"{ubicacion}: {mensaje}")

    def detalles(self):
        return {"ruta": self.ruta, "linea": self.linea, "columna": self.columna}


class ErrorDeValidacion(ErrorRelcat):
    """Una estructura no cumple sus axiomas; lleva la lista de violaciones."""

    codigo = "validacion"

    def __init__(self, mensaje, violaciones=()):
        self.violaciones = list(violaciones)
        if self.violaciones:
            mensaje = mensaje + ": " + "; ".join(self.violaciones[:5])
        super().__init__(mensaje)

    def detalles(self):
        return {"violaciones": self.violaciones}


class ErrorEstructural(ErrorRelcat):
    """Una construcción no tiene la forma que necesita quien la usa, por ejemplo un mapa que no es simplicial."""

    codigo = "estructural"


class PresupuestoExcedido(ErrorRelcat):
    """Se superó el presupuesto de símplices o la cota de longitud de palabras."""

    codigo = "presupuesto"

    def __init__(self, mensaje, limite=None):
        self.limite = limite
        super().__init__(mensaje)

    def detalles(self):
        return {"limite": self.limite}


class ErrorDeCotas(ErrorRelcat):
    """Se pidió un grado o nivel fuera del truncamiento disponible."""

    codigo = "cotas"


class ErrorDeConfluencia(ErrorRelcat):
    """El completado de Knuth-Bendix no convergió; lleva el par crítico pendiente."""

    codigo = "confluencia"

    def __init__(self, mensaje, par_critico=None):
        self.par_critico = par_critico
        super().__init__(mensaje)

    def detalles(self):
        if self.par_critico is None:
            return {}
        solapamiento, izquierda, derecha = self.par_critico
        return {
            "solapamiento": list(solapamiento),
            "reducto_izquierdo": list(izquierda),
            "reducto_derecho": list(derecha),
        }


class DiagramaNoFuntorial(ErrorRelcat):
    """El diagrama no respeta identidades, composición o marcados; lleva las violaciones."""

    codigo = "diagrama_no_funtorial"

    def __init__(self, mensaje, violaciones=()):
        self.violaciones = list(violaciones)
        super().__init__(mensaje)

    def detalles(self):
        return {"violaciones": self.violaciones}


class ErrorDeConfiguracion(ErrorRelcat):
    """Cotas, variables de entorno u opciones con valores inválidos."""

    codigo = "configuracion"
