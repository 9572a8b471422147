"""
Construcción de Grothendieck y mapa de comparación.

Para un nivel externo n, G_n es la categoría de Grothendieck del diagrama
a -> we(M_a^[n]): objetos (a, c) y morfismos (theta, m) con
m: F_theta(c) -> c'. El hocolim de Bousfield-Kan del diagrama de nervios se
compara con N(G_n) por un mapa de tipo Thomason, y G_n se lleva a
we(H^[n]) usando el cocono canónico. El mapa de comparación es la
composición de ambos.
"""

import logging

from .categorias.categoria_finita import CategoriaFinita
from .categorias.relativas import vertices_de_cadena
from .errores import ErrorEstructural
from .simplicial.conjuntos import MapaSimplicial
from .simplicial.nervios import mapa_de_nervios

LOGGER = logging.getLogger(__name__)


def construccion_de_grothendieck(indice, categorias, funtores):
    """
    Args:
        indice (CategoriaFinita): D
        categorias (dict): objeto de D -> CategoriaFinita (p. ej. we(M_a^[n]))
        funtores (dict): morfismo de D -> (mapa de objetos, mapa de morfismos)

    Returns:
        CategoriaFinita: La categoría de Grothendieck
    """
    D = indice
    objetos = [(alfa, c) for alfa in D.objetos for c in categorias[alfa].objetos]
    morfismos = {}
    identidades = {}
    for alfa, c in objetos:
        for theta in D.salientes(alfa):
            beta = D.destino(theta)
            imagen = funtores[theta][0][c]
            for m in categorias[beta].salientes(imagen):
                morfismos[((alfa, c), theta, m)] = ((alfa, c), (beta, categorias[beta].destino(m)))
        identidades[(alfa, c)] = ((alfa, c), D.identidad(alfa), categorias[alfa].identidad(c))

    salientes = {}
    for f in morfismos:
        salientes.setdefault(f[0], []).append(f)
    composicion = {}
    for f, (_, destino) in morfismos.items():
        (alfa, c), theta, m1 = f
        for g in salientes.get(destino, []):
            _, psi, m2 = g
            gamma = D.destino(psi)
            empujado = funtores[psi][1][m1]
            composicion[(g, f)] = ((alfa, c), D.componer(psi, theta), categorias[gamma].componer(m2, empujado))
    LOGGER.debug("categoría de Grothendieck: %d objetos, %d morfismos", len(objetos), len(morfismos))
    return CategoriaFinita(objetos, morfismos, identidades, composicion)


def mapa_de_thomason(diagrama_de_nervios, hocolim, categorias, funtores, nervio_grothendieck):
    """
    Mapa del hocolim de Bousfield-Kan de los nervios al nervio de G_n.

    Un k-símplice (a0 -> ... -> ak, u1...uk) va a la cadena cuyo j-ésimo
    morfismo es (theta_j, F_{0j}(u_j)).

    Args:
        diagrama_de_nervios (DiagramaSimplicial): a -> N(categorias[a])
        hocolim (ConjuntoSimplicialTruncado): Su hocolim de Bousfield-Kan
        categorias (dict), funtores (dict): Como en construccion_de_grothendieck
        nervio_grothendieck (ConjuntoSimplicialTruncado): N(G_n)
    """
    D = diagrama_de_nervios.indice
    componentes = []
    for k, grado in enumerate(hocolim.simplices):
        componente = {}
        for cadena, s in grado:
            if k == 0:
                componente[(cadena, s)] = ((cadena[0], s[0]),)
                continue
            alfa = D.origen(cadena[0])
            acumulado = D.identidad(alfa)
            objeto_actual = (alfa, categorias[alfa].origen(s[0]))
            imagen = []
            for theta, u in zip(cadena, s):
                acumulado = D.componer(theta, acumulado)
                m = funtores[acumulado][1][u]
                flecha = (objeto_actual, theta, m)
                imagen.append(flecha)
                beta = D.destino(theta)
                objeto_actual = (beta, categorias[beta].destino(m))
            componente[(cadena, s)] = tuple(imagen)
        componentes.append(componente)
    return MapaSimplicial(hocolim, nervio_grothendieck, componentes)


def funtor_de_comparacion(hocolim_categoria, cocono, grothendieck, categorias, categoria_H):
    """
    Psi: G_n -> we(H^[n]) inducido por el cocono canónico.

    (a, c) va a la cadena i_a(c); (theta, m) va a la escalera de componentes
    i_b(m_i)∘eta_theta(x_i).

    Raises:
        ErrorEstructural: Si alguna imagen no es un morfismo de we(H^[n])
    """
    H = hocolim_categoria.base
    M = hocolim_categoria.diagrama.valores

    def cadena_en_H(alfa, c):
        iota = cocono.inyecciones[alfa]
        return (iota.objeto(c[0]),) + tuple(iota.morfismo(f) for f in c[1:])

    mapa_objetos = {(alfa, c): cadena_en_H(alfa, c) for alfa, c in grothendieck.objetos}
    mapa_morfismos = {}
    for flecha in grothendieck.morfismos:
        (alfa, c), theta, m = flecha
        beta = grothendieck.destino(flecha)[0]
        eta = cocono.transformaciones[theta]
        iota_beta = cocono.inyecciones[beta]
        vertices = vertices_de_cadena(M[alfa].base, c)
        componentes = tuple(
            H.componer(iota_beta.morfismo(a), eta[x]) for a, x in zip(m[2], vertices)
        )
        imagen = (mapa_objetos[(alfa, c)], cadena_en_H(beta, categorias[beta].destino(m)), componentes)
        if imagen not in categoria_H.morfismos:
            raise ErrorEstructural(f"la imagen de {flecha} no es un morfismo de we(H^[n])")
        mapa_morfismos[flecha] = imagen
    return mapa_objetos, mapa_morfismos


def mapa_de_comparacion(thomason, nervio_grothendieck, nervio_H, funtor):
    """Composición BK-hocolim -> N(G_n) -> N(we(H^[n]))."""
    psi = mapa_de_nervios(nervio_grothendieck, nervio_H, funtor[0], funtor[1])
    componentes = [
        {s: psi.componentes[k][t] for s, t in componente.items()}
        for k, componente in enumerate(thomason.componentes)
    ]
    return MapaSimplicial(thomason.origen, nervio_H, componentes)
