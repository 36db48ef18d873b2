# Paquete de comandos de gestión