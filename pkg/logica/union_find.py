"""
Conjuntos disjuntos (union-find) sobre elementos arbitrarios hashables.

Se usa para las clases de equivalencia débil y para las componentes conexas
de un conjunto simplicial.
"""


class UnionFind:
    """Unión por rango con compresión de caminos."""

    def __init__(self, elementos=()):
        self.padres = {}
        self.rangos = {}
        for elemento in elementos:
            self.agregar(elemento)

    def agregar(self, elemento):
        """Agrega elemento como clase unitaria; no hace nada si ya estaba."""
        if elemento not in self.padres:
            self.padres[elemento] = elemento
            self.rangos[elemento] = 0

    def encontrar(self, elemento):
        """
        Representante de la clase de elemento.

        Raises:
            KeyError: Si el elemento nunca se agregó
        """
        raiz = elemento
        while self.padres[raiz] != raiz:
            raiz = self.padres[raiz]
        # compresión
        while self.padres[elemento] != raiz:
            siguiente = self.padres[elemento]
            self.padres[elemento] = raiz
            elemento = siguiente
        return raiz

    def unir(self, a, b):
        """
        Junta las clases de a y b.

        Returns:
            bool: True si estaban separadas
        """
        raiz_a = self.encontrar(a)
        raiz_b = self.encontrar(b)
        if raiz_a == raiz_b:
            return False
        if self.rangos[raiz_a] < self.rangos[raiz_b]:
            raiz_a, raiz_b = raiz_b, raiz_a
        self.padres[raiz_b] = raiz_a
        if self.rangos[raiz_a] == self.rangos[raiz_b]:
            self.rangos[raiz_a] += 1
        return True

    def clases(self):
        """
        Devuelve la partición en orden determinista.

        Returns:
            list[tuple]: Cada clase ordenada; las clases ordenadas por su menor elemento
        """
        agrupados = {}
        for elemento in self.padres:
            agrupados.setdefault(self.encontrar(elemento), []).append(elemento)
        return sorted((tuple(sorted(clase)) for clase in agrupados.values()), key=lambda clase: clase[0])
