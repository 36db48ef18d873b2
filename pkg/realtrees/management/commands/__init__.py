# Comandos de gestión personalizados