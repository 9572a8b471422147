"""
Homología entera de conjuntos simpliciales truncados.

Se usan cadenas normalizadas (solo símplices no degenerados), matrices de
borde dispersas y factores invariantes. La eliminación dispersa toma primero
los pivotes unitarios y deja el bloque restante a la forma normal de Smith
densa. El certificado de equivalencia compara pi_0 y exige que el cono del
mapa sea acíclico hasta el grado K.
"""

import heapq
import logging
from dataclasses import dataclass, field

import sympy

from .errores import ErrorDeCotas, ErrorDeValidacion
from .simplicial.conjuntos import componentes_conexas

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class GrupoDeHomologia:
    """Z^rango ⊕ Z/t1 ⊕ ... con t_i >= 2 y t_i | t_{i+1}."""

    rango: int
    torsion: tuple = ()

    def __post_init__(self):
        torsion = tuple(self.torsion)
        if self.rango < 0 or any(t < 2 for t in torsion):
            raise ErrorDeValidacion(f"grupo de homología inválido: {self.rango}, {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ErrorDeValidacion(f"la torsión {torsion} no está en forma de factores invariantes")
        object.__setattr__(self, "torsion", torsion)

    def es_trivial(self):
        return self.rango == 0 and not self.torsion

    def a_diccionario(self):
        return {"rank": self.rango, "torsion": list(self.torsion)}

    def __str__(self):
        partes = [f"Z^{self.rango}"] if self.rango else []
        partes += [f"Z/{t}" for t in self.torsion]
        return " ⊕ ".join(partes) or "0"


class ComplejoDeCadenas:
    """
    Complejo de cadenas libre y acotado.

    bases[k] lista los generadores de grado k; bordes[k][j] es la columna
    dispersa {fila: coeficiente} del borde del j-ésimo generador de grado k
    (bordes[0] son columnas vacías).
    """

    def __init__(self, bases, bordes):
        self.bases = [list(base) for base in bases]
        self.bordes = bordes
        self._factores = {}

    @property
    def grado_maximo(self):
        """Último grado con base de cadenas."""
        return len(self.bases) - 1

    def dimension(self, k):
        """Rango de C_k; 0 fuera de los grados calculados."""
        return len(self.bases[k]) if 0 <= k < len(self.bases) else 0

    def matriz_densa(self, k):
        """La matriz de ∂_k como sympy.Matrix (filas: grado k-1, columnas: grado k)."""
        filas = self.dimension(k - 1)
        columnas = self.dimension(k)
        datos = [[0] * columnas for _ in range(filas)]
        if k >= 1:
            for j, columna in enumerate(self.bordes[k]):
                for i, valor in columna.items():
                    datos[i][j] = valor
        return sympy.Matrix(filas, columnas, lambda i, j: datos[i][j])

    def factores(self, k):
        """Factores invariantes no nulos de ∂_k."""
        if k < 1 or k > self.grado_maximo:
            return ()
        if k not in self._factores:
            self._factores[k] = factores_invariantes_dispersos(self.bordes[k])
        return self._factores[k]

    def es_complejo(self):
        """∂_{k-1} ∘ ∂_k = 0 en todos los grados."""
        for k in range(2, self.grado_maximo + 1):
            for columna in self.bordes[k]:
                total = {}
                for i, valor in columna.items():
                    for fila, otro in self.bordes[k - 1][i].items():
                        total[fila] = total.get(fila, 0) + valor * otro
                if any(total.values()):
                    return False
        return True


def _borde_normalizado(X, k, s, indices):
    columna = {}
    for i in range(k + 1):
        cara = X.cara(k, i, s)
        fila = indices.get(cara)
        if fila is None:
            continue
        valor = columna.get(fila, 0) + (-1) ** i
        if valor:
            columna[fila] = valor
        else:
            del columna[fila]
    return columna


def cadenas_normalizadas(conjunto, K):
    """
    Complejo normalizado hasta el grado K + 1 (lo necesario para H_0..H_K).

    Raises:
        ErrorDeCotas: Si K + 1 supera la cota del conjunto
    """
    X = conjunto
    if K + 1 > X.cota:
        raise ErrorDeCotas(f"la homología hasta grado {K} necesita cota >= {K + 1}, no {X.cota}")
    bases = [X.no_degenerados(k) for k in range(K + 2)]
    indices = [{s: i for i, s in enumerate(base)} for base in bases]
    bordes = [[{} for _ in bases[0]]]
    for k in range(1, K + 2):
        bordes.append([_borde_normalizado(X, k, s, indices[k - 1]) for s in bases[k]])
    return ComplejoDeCadenas(bases, bordes)


@dataclass
class FormaNormalSmith:
    """A = izquierda · diagonal · derecha, con izquierda y derecha unimodulares."""

    diagonal: sympy.Matrix
    izquierda: sympy.Matrix
    derecha: sympy.Matrix

    def factores(self):
        n = min(self.diagonal.shape)
        return tuple(int(self.diagonal[i, i]) for i in range(n) if self.diagonal[i, i] != 0)


def _identidad(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _snf_denso(A, con_transformaciones):
    """
    Eliminación de Smith sobre listas de enteros de Python.

    Devuelve (D, U, V) con A = U·D·V; U y V son None si no se piden.
    Se llevan las inversas de cada operación elemental en U y V.
    """
    A = [list(fila) for fila in A]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identidad(m) if con_transformaciones else None
    V = _identidad(n) if con_transformaciones else None

    def cambiar_filas(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            for fila in U:
                fila[i], fila[j] = fila[j], fila[i]

    def cambiar_columnas(i, j):
        for fila in A:
            fila[i], fila[j] = fila[j], fila[i]
        if V is not None:
            V[i], V[j] = V[j], V[i]

    def sumar_fila(destino, origen, q):
        # fila_destino += q * fila_origen
        fila_d, fila_o = A[destino], A[origen]
        for c in range(n):
            fila_d[c] += q * fila_o[c]
        if U is not None:
            for fila in U:
                fila[origen] -= q * fila[destino]

    def sumar_columna(destino, origen, q):
        # columna_destino += q * columna_origen
        for fila in A:
            fila[destino] += q * fila[origen]
        if V is not None:
            fila_o, fila_d = V[origen], V[destino]
            for c in range(n):
                fila_o[c] -= q * fila_d[c]

    def negar_fila(i):
        A[i] = [-a for a in A[i]]
        if U is not None:
            for fila in U:
                fila[i] = -fila[i]

    t = 0
    while t < min(m, n):
        candidatos = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not candidatos:
            break
        _, i, j = min(candidatos)
        cambiar_filas(t, i)
        cambiar_columnas(t, j)
        while True:
            pivote = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    sumar_fila(i, t, -(A[i][t] // pivote))
            for j in range(t + 1, n):
                if A[t][j]:
                    sumar_columna(j, t, -(A[t][j] // pivote))
            restos = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            restos += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            if restos:
                _, i, j = min(restos)
                cambiar_filas(t, i)
                cambiar_columnas(t, j)
                continue
            no_divisible = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % pivote), None
            )
            if no_divisible is None:
                break
            sumar_fila(t, no_divisible, 1)
        if A[t][t] < 0:
            negar_fila(t)
        t += 1
    return A, U, V


def forma_normal_smith(matriz):
    """
    Forma normal de Smith con matrices de transformación.

    Args:
        matriz: sympy.Matrix o lista de listas de enteros

    Returns:
        FormaNormalSmith: diagonal D con d_i | d_{i+1} y A = U·D·V
    """
    if isinstance(matriz, sympy.MatrixBase):
        filas, columnas = matriz.shape
        datos = [[int(matriz[i, j]) for j in range(columnas)] for i in range(filas)]
    else:
        datos = [[int(a) for a in fila] for fila in matriz]
        filas = len(datos)
        columnas = len(datos[0]) if datos else 0
    D, U, V = _snf_denso(datos, True)
    return FormaNormalSmith(
        sympy.Matrix(filas, columnas, lambda i, j: D[i][j]),
        sympy.Matrix(filas, filas, lambda i, j: U[i][j]),
        sympy.Matrix(columnas, columnas, lambda i, j: V[i][j]),
    )


def _reducir_columna(columna, pivotes, fila_de_pivote):
    """Elimina de la columna todas las filas pivote, en orden de creación de los pivotes."""
    pendientes = [fila_de_pivote[fila] for fila in columna if fila in fila_de_pivote]
    heapq.heapify(pendientes)
    while pendientes:
        p = heapq.heappop(pendientes)
        fila, pivote = pivotes[p]
        c = columna.get(fila)
        if not c:
            continue
        q = c * pivote[fila]
        for r, a in pivote.items():
            nuevo = columna.get(r, 0) - q * a
            if nuevo:
                if r not in columna and r in fila_de_pivote:
                    heapq.heappush(pendientes, fila_de_pivote[r])
                columna[r] = nuevo
            else:
                columna.pop(r, None)
    return columna


def factores_invariantes_dispersos(columnas):
    """
    Factores invariantes no nulos de una matriz dada por columnas dispersas.

    Args:
        columnas (list[dict]): Columna j como {fila: coeficiente}

    Returns:
        tuple[int]: Factores positivos en orden de divisibilidad (incluye los 1)
    """
    pivotes = []
    fila_de_pivote = {}
    restantes = [dict(c) for c in columnas if c]
    cambio = True
    while cambio:
        cambio = False
        siguientes = []
        for columna in restantes:
            _reducir_columna(columna, pivotes, fila_de_pivote)
            if not columna:
                continue
            unitaria = next((fila for fila in sorted(columna) if columna[fila] in (1, -1)), None)
            if unitaria is None:
                siguientes.append(columna)
                continue
            fila_de_pivote[unitaria] = len(pivotes)
            pivotes.append((unitaria, columna))
            cambio = True
        restantes = siguientes
    factores = [1] * len(pivotes)
    if restantes:
        filas = sorted({fila for columna in restantes for fila in columna})
        posicion = {fila: i for i, fila in enumerate(filas)}
        densa = [[0] * len(restantes) for _ in filas]
        for j, columna in enumerate(restantes):
            for fila, valor in columna.items():
                densa[posicion[fila]][j] = valor
        LOGGER.debug("bloque denso de %dx%d tras %d pivotes unitarios", len(filas), len(restantes), len(pivotes))
        D, _, _ = _snf_denso(densa, False)
        factores += [abs(D[i][i]) for i in range(min(len(filas), len(restantes))) if D[i][i]]
    return tuple(sorted(factores))


def factores_invariantes(matriz):
    """Factores invariantes no nulos de una matriz densa (sympy.Matrix o listas)."""
    return forma_normal_smith(matriz).factores()


def homologia(complejo, k):
    """
    H_k del complejo.

    Args:
        complejo (ComplejoDeCadenas): Debe incluir el grado k + 1
        k (int): Grado

    Returns:
        GrupoDeHomologia
    """
    if k + 1 > complejo.grado_maximo:
        raise ErrorDeCotas(f"H_{k} necesita el complejo hasta grado {k + 1}")
    rango_k = len(complejo.factores(k))
    siguientes = complejo.factores(k + 1)
    rango = complejo.dimension(k) - rango_k - len(siguientes)
    return GrupoDeHomologia(rango, tuple(t for t in siguientes if t > 1))


def homologia_hasta(conjunto, K):
    """[H_0, ..., H_K] de un conjunto simplicial truncado."""
    complejo = cadenas_normalizadas(conjunto, K)
    return [homologia(complejo, k) for k in range(K + 1)]


def cono_algebraico(mapa, K):
    """
    Cono del mapa de cadenas normalizadas inducido por un mapa simplicial.

    cono_k = C_{k-1}(X) ⊕ C_k(Y) con ∂(x, y) = (-∂x, f(x) + ∂y), hasta el grado K + 1.
    """
    X, Y = mapa.origen, mapa.destino
    if K + 1 > X.cota or K + 1 > Y.cota:
        raise ErrorDeCotas(f"el cono hasta grado {K} necesita cotas >= {K + 1}")
    base_x = [X.no_degenerados(k) for k in range(K + 1)]
    base_y = [Y.no_degenerados(k) for k in range(K + 2)]
    indice_x = [{s: i for i, s in enumerate(base)} for base in base_x]
    indice_y = [{s: i for i, s in enumerate(base)} for base in base_y]
    bases = []
    bordes = []
    for k in range(K + 2):
        desde_x = base_x[k - 1] if k >= 1 else []
        bases.append([("x", s) for s in desde_x] + [("y", t) for t in base_y[k]])
        columnas = []
        # en grado k - 1 los generadores x van primero, luego los y
        desplazamiento = len(base_x[k - 2]) if k >= 2 else 0
        for s in desde_x:
            columna = {}
            if k - 1 >= 1:
                for fila, valor in _borde_normalizado(X, k - 1, s, indice_x[k - 2]).items():
                    columna[fila] = -valor
            imagen = indice_y[k - 1].get(mapa(k - 1, s))
            if imagen is not None:
                columna[desplazamiento + imagen] = columna.get(desplazamiento + imagen, 0) + 1
            columnas.append(columna)
        for t in base_y[k]:
            columna = {}
            if k >= 1:
                for fila, valor in _borde_normalizado(Y, k, t, indice_y[k - 1]).items():
                    columna[desplazamiento + fila] = valor
            columnas.append(columna)
        bordes.append(columnas)
    return ComplejoDeCadenas(bases, bordes)


@dataclass
class CertificadoDeEquivalencia:
    aprobado: bool
    pi0_biyectivo: bool
    componentes_origen: int
    componentes_destino: int
    homologia_cono: list = field(default_factory=list)
    grados_fallidos: list = field(default_factory=list)

    def a_diccionario(self):
        return {
            "aprobado": self.aprobado,
            "pi0_biyectivo": self.pi0_biyectivo,
            "componentes_origen": self.componentes_origen,
            "componentes_destino": self.componentes_destino,
            "homologia_cono": [grupo.a_diccionario() for grupo in self.homologia_cono],
            "grados_fallidos": self.grados_fallidos,
        }


def certificado_de_equivalencia(mapa, K):
    """
    Certifica que un mapa simplicial es una equivalencia hasta el grado K.

    Pasa si el mapa induce una biyección en pi_0 y el cono tiene homología
    nula en los grados 0..K. Nunca lanza por una falla: la registra.

    Args:
        mapa (MapaSimplicial): f: X -> Y con cotas >= K + 1
        K (int): Grado máximo comparado

    Returns:
        CertificadoDeEquivalencia
    """
    X, Y = mapa.origen, mapa.destino
    componentes_x = componentes_conexas(X)
    componentes_y = componentes_conexas(Y)
    componente_de = {}
    for indice, componente in enumerate(componentes_y):
        for vertice in componente:
            componente_de[vertice] = indice
    imagenes = [componente_de[mapa(0, componente[0])] for componente in componentes_x]
    biyectivo = len(set(imagenes)) == len(imagenes) == len(componentes_y)

    cono = cono_algebraico(mapa, K)
    grupos = [homologia(cono, k) for k in range(K + 1)]
    fallidos = [k for k, grupo in enumerate(grupos) if not grupo.es_trivial()]
    LOGGER.info("certificado: pi_0 %s, grados fallidos %s", "biyectivo" if biyectivo else "no biyectivo", fallidos)
    return CertificadoDeEquivalencia(
        aprobado=biyectivo and not fallidos,
        pi0_biyectivo=biyectivo,
        componentes_origen=len(componentes_x),
        componentes_destino=len(componentes_y),
        homologia_cono=grupos,
        grados_fallidos=fallidos,
    )
