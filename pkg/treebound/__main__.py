from treebound.cli.main import main

main()
