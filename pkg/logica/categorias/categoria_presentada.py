"""
Categorías presentadas por generadores y relaciones.

Las palabras son tuplas de nombres de generadores en orden diagramático: el
primer generador de la tupla es el primero que se aplica. La palabra vacía en
un objeto x representa la identidad de x. Las relaciones se completan con
Knuth-Bendix bajo el orden shortlex; luego se enumeran las formas normales para
obtener una CategoriaFinita.
"""

import logging
from collections import defaultdict, deque

from ..errores import ErrorDeConfluencia, ErrorDeValidacion, PresupuestoExcedido
from .categoria_finita import CategoriaFinita, nombre_identidad

LOGGER = logging.getLogger(__name__)

SEPARADOR = "*"


def _buscar(palabra, patron):
    """Primera posición donde patron aparece como subpalabra contigua, o -1."""
    largo = len(patron)
    i = 0
    while i + largo <= len(palabra):
        if palabra[i:i + largo] == patron:
            return i
        i += 1
    return -1


class SistemaDeReescritura:
    """
    Reglas izquierda -> derecha que decrecen estrictamente en shortlex.

    Un sistema completo da formas normales únicas: dos caminos paralelos
    representan el mismo morfismo si y solo si se reducen a la misma palabra.
    """

    def __init__(self, reglas, rango):
        self.reglas = sorted(reglas, key=lambda regla: (_clave(regla[0], rango), _clave(regla[1], rango)))
        self.rango = rango

    def __len__(self):
        return len(self.reglas)

    def reducir(self, palabra):
        palabra = tuple(palabra)
        while True:
            anterior = palabra
            for izquierda, derecha in self.reglas:
                posicion = _buscar(palabra, izquierda)
                while posicion >= 0:
                    palabra = palabra[:posicion] + derecha + palabra[posicion + len(izquierda):]
                    posicion = _buscar(palabra, izquierda)
            if palabra == anterior:
                return palabra


def _clave(palabra, rango):
    return (len(palabra), tuple(rango[g] for g in palabra))


def _orientar(a, b, rango):
    if _clave(a, rango) > _clave(b, rango):
        return a, b
    return b, a


def completar_knuth_bendix(relaciones, generadores, max_pasadas=20):
    """
    Completa un sistema de reescritura sobre caminos.

    Args:
        relaciones (list): Pares (palabra, palabra) de caminos paralelos
        generadores (iterable): Nombres de los generadores; su orden fija el shortlex
        max_pasadas (int): Número máximo de rondas de pares críticos

    Returns:
        SistemaDeReescritura: Sistema confluente e interreducido

    Raises:
        ErrorDeConfluencia: Si tras max_pasadas quedan pares críticos sin resolver
    """
    rango = {g: i for i, g in enumerate(sorted(generadores))}
    reglas = {}
    pendientes = deque()
    for a, b in relaciones:
        a, b = tuple(a), tuple(b)
        if a != b:
            pendientes.append(_orientar(a, b, rango))

    def reducir(palabra):
        return SistemaDeReescritura(reglas.items(), rango).reducir(palabra)

    pasada = 0
    while True:
        # interreducción: ningún lado izquierdo contiene a otro y los derechos son irreducibles
        while pendientes:
            a, b = pendientes.popleft()
            a, b = reducir(a), reducir(b)
            if a == b:
                continue
            izquierda, derecha = _orientar(a, b, rango)
            nuevas = {}
            for otra_izquierda, otra_derecha in reglas.items():
                if _buscar(otra_izquierda, izquierda) >= 0:
                    pendientes.append((otra_izquierda, otra_derecha))
                else:
                    nuevas[otra_izquierda] = otra_derecha
            nuevas[izquierda] = derecha
            reglas = nuevas
            sistema = SistemaDeReescritura(reglas.items(), rango)
            reglas = {l: sistema.reducir(r) for l, r in reglas.items()}

        sistema = SistemaDeReescritura(reglas.items(), rango)
        prefijos = defaultdict(list)
        sufijos = defaultdict(list)
        for izquierda, derecha in sistema.reglas:
            for corte in range(1, len(izquierda)):
                prefijos[izquierda[:corte]].append((izquierda, derecha))
                sufijos[izquierda[corte:]].append((izquierda, derecha))

        criticos = []
        for solapado in sorted(prefijos.keys() & sufijos.keys(), key=lambda w: _clave(w, rango)):
            for izquierda1, derecha1 in prefijos[solapado]:
                resto = izquierda1[len(solapado):]
                for izquierda2, derecha2 in sufijos[solapado]:
                    inicio = izquierda2[:-len(solapado)]
                    # inicio + solapado + resto se reduce de dos maneras
                    reducto1 = sistema.reducir(derecha2 + resto)
                    reducto2 = sistema.reducir(inicio + derecha1)
                    if reducto1 != reducto2:
                        criticos.append((inicio + solapado + resto, reducto1, reducto2))

        if not criticos:
            LOGGER.debug("completado confluente con %d reglas en %d pasadas", len(sistema), pasada)
            return sistema
        pasada += 1
        if pasada > max_pasadas:
            solapamiento, reducto1, reducto2 = criticos[0]
            raise ErrorDeConfluencia(
                f"el completado no convergió en {max_pasadas} pasadas; par crítico pendiente en "
                f"{SEPARADOR.join(solapamiento)}: {list(reducto1)} vs {list(reducto2)}",
                par_critico=criticos[0],
            )
        for _, reducto1, reducto2 in criticos:
            pendientes.append(_orientar(reducto1, reducto2, rango))


def _paralelos(extremos_a, extremos_b):
    # la palabra vacía es paralela a cualquier endomorfismo
    if extremos_a[0] is None:
        return extremos_b[0] is None or extremos_b[0] == extremos_b[1]
    if extremos_b[0] is None:
        return extremos_a[0] == extremos_a[1]
    return extremos_a == extremos_b


class CategoriaPresentada:
    """
    Categoría libre sobre un grafo de generadores, cocientada por relaciones.

    Cada relación es un par de palabras que deben ser caminos paralelos. La
    presentación se completa una sola vez y se guarda el sistema resultante.
    """

    def __init__(self, objetos, generadores, relaciones=(), max_longitud_palabra=8, max_pasadas_completado=20):
        """
        Args:
            objetos (iterable): Objetos de la categoría
            generadores (dict): nombre -> (origen, destino)
            relaciones (iterable): Pares de palabras (tuplas de generadores)
            max_longitud_palabra (int): Longitud máxima permitida a una forma normal
            max_pasadas_completado (int): Rondas máximas de Knuth-Bendix
        """
        self.objetos = tuple(sorted(objetos))
        self.generadores = {g: tuple(generadores[g]) for g in sorted(generadores)}
        self.relaciones = [(tuple(a), tuple(b)) for a, b in relaciones]
        self.max_longitud_palabra = max_longitud_palabra
        self.max_pasadas_completado = max_pasadas_completado
        self._sistema = None

        violaciones = []
        for g, (origen, destino) in self.generadores.items():
            if origen not in self.objetos or destino not in self.objetos:
                violaciones.append(f"el generador {g} usa objetos desconocidos")
        if not violaciones:
            for a, b in self.relaciones:
                extremos_a = self.extremos(a)
                extremos_b = self.extremos(b)
                if extremos_a is None or extremos_b is None:
                    violaciones.append(f"la relación {list(a)} = {list(b)} no es un camino")
                elif not _paralelos(extremos_a, extremos_b):
                    violaciones.append(f"la relación {list(a)} = {list(b)} une caminos no paralelos")
        if violaciones:
            raise ErrorDeValidacion("presentación inválida", violaciones)

    def extremos(self, palabra):
        """(origen, destino) de un camino, (None, None) si es vacío, None si no compone."""
        if not palabra:
            return (None, None)
        origen = self.generadores[palabra[0]][0]
        actual = origen
        for g in palabra:
            if self.generadores[g][0] != actual:
                return None
            actual = self.generadores[g][1]
        return (origen, actual)

    @property
    def sistema(self):
        if self._sistema is None:
            LOGGER.info("completando presentación con %d generadores y %d relaciones",
                        len(self.generadores), len(self.relaciones))
            self._sistema = completar_knuth_bendix(
                self.relaciones, self.generadores, max_pasadas=self.max_pasadas_completado
            )
        return self._sistema

    def reducir(self, palabra):
        return self.sistema.reducir(palabra)

    def formas_normales(self):
        """
        Enumera todos los morfismos como pares (origen, forma normal).

        Returns:
            list: Pares ordenados (objeto de origen, palabra irreducible)

        Raises:
            PresupuestoExcedido: Si aparece una forma normal más larga que max_longitud_palabra
        """
        salientes = defaultdict(list)
        for g, (origen, _) in self.generadores.items():
            salientes[origen].append(g)
        formas = {(x, ()) for x in self.objetos}
        frontera = sorted(formas)
        while frontera:
            nueva = []
            for origen, palabra in frontera:
                actual = origen if not palabra else self.generadores[palabra[-1]][1]
                for g in salientes[actual]:
                    reducida = self.reducir(palabra + (g,))
                    if (origen, reducida) in formas:
                        continue
                    if len(reducida) > self.max_longitud_palabra:
                        raise PresupuestoExcedido(
                            f"la categoría presentada no cierra con palabras de longitud <= {self.max_longitud_palabra}",
                            limite=self.max_longitud_palabra,
                        )
                    formas.add((origen, reducida))
                    nueva.append((origen, reducida))
            frontera = sorted(nueva)
        return sorted(formas)

    def nombre_de_palabra(self, origen, palabra):
        """Identificador del morfismo: id_<objeto> o los generadores en orden de composición unidos por *."""
        palabra = self.reducir(palabra)
        if not palabra:
            return nombre_identidad(origen)
        return SEPARADOR.join(reversed(palabra))

    def a_categoria_finita(self):
        """
        Enumera la presentación y arma la tabla de composición.

        Returns:
            CategoriaFinita: La categoría presentada con morfismos nombrados por sus formas normales
        """
        formas = self.formas_normales()
        morfismos = {}
        palabras = {}
        identidades = {}
        for origen, palabra in formas:
            destino = origen if not palabra else self.generadores[palabra[-1]][1]
            nombre = self.nombre_de_palabra(origen, palabra)
            morfismos[nombre] = (origen, destino)
            palabras[nombre] = palabra
            if not palabra:
                identidades[origen] = nombre
        salientes = defaultdict(list)
        for nombre, (origen, _) in morfismos.items():
            salientes[origen].append(nombre)
        composicion = {}
        for f, (origen, destino) in morfismos.items():
            for g in salientes[destino]:
                composicion[(g, f)] = self.nombre_de_palabra(origen, palabras[f] + palabras[g])
        LOGGER.info("categoría presentada enumerada: %d objetos, %d morfismos", len(self.objetos), len(morfismos))
        return CategoriaFinita(self.objetos, morfismos, identidades, composicion)
