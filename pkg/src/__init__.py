# PRISMA prismatic decomposition workbench
