from eulerzeta.cli import main

main()
