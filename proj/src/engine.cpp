namespace gch {}
